#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlab/instance.hpp"

// Verification checks behind the `verify` command and the acceptance suite.
// Each check draws its own deterministic instance stream, compares the
// query-based implementations against position-reading references, and
// reports every violated guarantee.
namespace dlab::checks {

struct CheckResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // informational, never failing
  std::optional<Instance> counterexample;

  void fail(const std::string& what, const Instance* instance = nullptr);
  void merge(const CheckResult& other);
};

// Voter/candidate query simulations: exact answers, per-call regular budgets
// (2 and 6), the combined budget inequality, and log replay determinism.
CheckResult oracle_simulations(std::uint64_t seed, int instances,
                               int pairs_per_kind);

// Axis recovery equals the ground-truth order up to reversal and passes the
// single-peakedness validity check.
CheckResult axis_recovery(std::uint64_t seed, int trials);

// dp_opt_line == subset enumeration on random weighted instances, both
// objectives; optimal_committee == brute_force_opt on random small instances.
CheckResult exact_oracles(std::uint64_t seed, int trials);

// Greedy equals the full-information reference under the shared tie-break,
// stays within 6k-15 candidate queries, and meets its distortion caps
// (social <= 5n). The second result isolates the egalitarian cap (<= 5x the
// egalitarian optimum) over the same sweep.
std::pair<CheckResult, CheckResult> greedy_sweep(std::uint64_t seed,
                                                 int trials);

// The k=3 greedy showcase instance: committee {a,d,e}, social distortion
// within 1e-3 of 10/3.
CheckResult greedy_showcase();

enum class IntervalRoutine { kDistant, kPartition, kBoth };

// distant_candidate against the brute-force champion (<= 3 queries) and
// partition_interval against the true midpoint straddle (<= 4 queries,
// half-length sub-intervals, voter counts preserved).
CheckResult interval_routines(std::uint64_t seed, int trials,
                              IntervalRoutine which);

// Coreset guarantees: retained set costs at most twice the optimum, final
// social distortion <= 5, interval budget respected, candidate queries within
// the derived ceiling, plus the egalitarian restriction bounds and the
// no-split degenerate case.
CheckResult coreset_guarantees(std::uint64_t seed, int trials);

// k=2 rules: extremes <= 2n-2 and median <= n+1 on random instances, both
// tightness instances within 1e-4 of their targets, two-of-three <= 3 on
// random 3-candidate instances and >= 3-1e-2 on its three hard instances.
CheckResult k2_rules(std::uint64_t seed, int trials);

// Query lower-bound family for k in {3..6}: profile-identical variants,
// optimum social cost k-2 / egalitarian cost 1, far-pair penalty >= D; plus
// the k=2 and k=m-1 hard families.
CheckResult lower_bound_family();

}  // namespace dlab::checks
