#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dlab/axis.hpp"
#include "dlab/instance.hpp"
#include "dlab/oracle.hpp"

namespace dlab {

// One interval of the hierarchical partition: a contiguous axis-index range,
// the number of voters whose top candidate lies inside, and its length.
struct AxisInterval {
  int left;   // axis position, inclusive
  int right;  // axis position, inclusive
  long voters;
  double length;

  int candidate_count() const { return right - left + 1; }
  double weight() const { return static_cast<double>(voters) * length; }
};

struct RuleOutput {
  Committee committee;
  std::vector<int> elected_order;        // greedy: ids in election order
  std::vector<AxisInterval> partition;   // coreset: final interval set
  std::vector<int> good_set;             // coreset: retained candidate ids
  double delta_star = 0.0;               // coreset: max initial length
};

// ---- k = 2 rules (no queries) ---------------------------------------------

// Leftmost and rightmost active candidates.
RuleOutput rule_extremes(const RankingProfile& profile,
                         const CandidateAxis& axis, const ClusterTable& table);

// Splits voters by their preference between the two extreme active
// candidates and elects the top candidate of each cluster's median voter
// (leftmost median on the left cluster, rightmost median on the right one),
// located by cumulative cluster counts along the axis.
RuleOutput rule_median_clusters(const RankingProfile& profile,
                                const CandidateAxis& axis,
                                const ClusterTable& table);

// Electing 2 out of exactly 3 candidates from ranking counts alone.
RuleOutput rule_two_of_three(const RankingProfile& profile,
                             const CandidateAxis& axis,
                             const ClusterTable& table);

// ---- query-based building blocks ------------------------------------------

// Most distant candidate of the axis interval [left, right] to its endpoints,
// with that distance. At most 3 candidate queries (2 when the interval has
// exactly 3 candidates). Requires every candidate in the interval active.
std::pair<int, double> distant_candidate(const RankingProfile& profile,
                                         const CandidateAxis& axis,
                                         const ClusterTable& table,
                                         DistanceOracle& oracle, int left,
                                         int right);

struct SplitResult {
  AxisInterval left;
  AxisInterval right;
};

// Splits [left, right] at its geometric midpoint: the left part ends at the
// rightmost candidate on the left of (c+c')/2, the right part starts at the
// leftmost candidate on its right. At most 4 candidate queries; both
// sub-lengths are at most half the parent's. Interval needs >= 4 candidates.
SplitResult partition_interval(const RankingProfile& profile,
                               const CandidateAxis& axis,
                               const ClusterTable& table,
                               DistanceOracle& oracle, int left, int right);

// ---- k >= 2 rules ----------------------------------------------------------

// Farthest-first greedy seeded with the two extreme candidates, maintaining
// per-interval champions via distant_candidate. Ties: largest distance first,
// then leftmost interval. At most 6k-15 candidate queries for k >= 3, none
// for k = 2. Requires all candidates active.
RuleOutput rule_greedy(const RankingProfile& profile, const CandidateAxis& axis,
                       const ClusterTable& table, DistanceOracle& oracle,
                       int k);

enum class GapQueryMode { kCandidate, kRegular };

// Reconstructs every consecutive candidate gap (m-1 candidate queries, or
// m+3 regular queries measured from the two extreme clusters), then solves
// the candidate-restricted instance exactly.
RuleOutput rule_full_axis_dp(const RankingProfile& profile,
                             const CandidateAxis& axis,
                             const ClusterTable& table, DistanceOracle& oracle,
                             int k,
                             GapQueryMode mode = GapQueryMode::kCandidate);

// Exposed for the cross-mode equality check: the reconstructed consecutive
// gaps, axis-left to axis-right.
std::vector<double> reconstruct_gaps(const RankingProfile& profile,
                                     const CandidateAxis& axis,
                                     const ClusterTable& table,
                                     DistanceOracle& oracle, GapQueryMode mode);

// Hierarchical partitioning: start from the greedy committee's Voronoi
// intervals, repeatedly split the heaviest interval with >= 4 candidates
// (weight = voters x length; ties leftmost) until the interval budget
// 7k(log2(5nk)+2) is exhausted or the heaviest weight drops to delta*/(5k),
// keep interval endpoints (all members for short intervals), query their
// consecutive gaps and solve the restricted instance exactly.
RuleOutput rule_coreset(const RankingProfile& profile, const CandidateAxis& axis,
                        const ClusterTable& table, DistanceOracle& oracle,
                        int k);

// Interval budget used by rule_coreset's splitting loop.
double coreset_interval_cap(int k, long n);

// Ceiling on issued candidate queries for rule_coreset, given the size of the
// retained candidate set.
long coreset_query_cap(int k, long n, int good_set_size);

// ---- registry ---------------------------------------------------------------

using RuleFn = std::function<RuleOutput(
    const RankingProfile&, const CandidateAxis&, const ClusterTable&,
    DistanceOracle&, int)>;

struct RuleEntry {
  std::string name;
  RuleFn run;
};

// extremes2 | median2 | two-of-three | greedy | full-axis-dp | coreset
const std::vector<RuleEntry>& rule_registry();
const RuleEntry* find_rule(const std::string& name);

}  // namespace dlab
