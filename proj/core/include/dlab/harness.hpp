#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dlab/exact.hpp"
#include "dlab/instance.hpp"
#include "dlab/rules.hpp"

namespace dlab {

// One evaluation record; serializes to one CSV line.
struct CsvRow {
  std::string instance_id;
  std::string family;
  std::string rule;
  int k = 0;
  int n = 0;
  int m = 0;
  long q_regular = 0;
  long q_candidate = 0;
  long q_voter = 0;
  long q_gross_regular_equiv = 0;
  double sc_rule = 0.0;
  double sc_opt = 0.0;
  double dist_sc = 1.0;
  double ec_rule = 0.0;
  double ec_opt = 0.0;
  double dist_ec = 1.0;
  double runtime_ms = 0.0;
};

extern const char* const kCsvHeader;

std::string format_csv_row(const CsvRow& row);
void write_csv(const std::vector<CsvRow>& rows, std::ostream& out);

// Full pipeline for one (instance, rule, k): profile, axis, clusters, fresh
// oracle, rule, evaluation. Throws on precondition violations.
struct TrialResult {
  RuleOutput output;
  EvaluationReport report;
  QueryLedger ledger;
};
TrialResult run_trial(const Instance& instance, const std::string& rule_name,
                      int k, GapQueryMode mode = GapQueryMode::kCandidate);

CsvRow to_csv_row(const Instance& instance, const std::string& instance_id,
                  const std::string& family, const std::string& rule_name,
                  int k, const EvaluationReport& report);

// Violations of the per-rule guarantees (query budgets and distortion caps)
// for a finished trial; empty means everything holds.
std::vector<std::string> bound_violations(const Instance& instance,
                                          const std::string& rule_name, int k,
                                          const TrialResult& trial);

struct SweepConfig {
  std::vector<std::string> rules;
  int k_min = 2, k_max = 2;
  int n_min = 4, n_max = 16;
  int m_min = 3, m_max = 8;
  int trials = 10;
  std::uint64_t seed = 1;
  Placement placement = Placement::kUniform;
  bool active_only = true;
  std::string out;

  void validate() const;  // throws BadParams
};

// One row per (instance, rule); rows come back sorted by (instance_id, rule)
// regardless of scheduling. threads <= 0 picks a default capped by the
// DISTORTION_LAB_THREADS environment variable.
std::vector<CsvRow> run_sweep(const SweepConfig& config, int threads = 0);

int sweep_thread_count(int requested);

struct VerifyOptions {
  std::uint64_t seed = 20240901;
  // Scales the trial counts; 1.0 runs the documented full volume.
  double scale = 1.0;
  // Where to persist the first failing instance (empty: don't persist).
  std::string counterexample_dir;
  std::ostream* info = nullptr;  // optional progress / report stream
};

struct VerifyResult {
  std::string suite;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::optional<std::string> counterexample_path;
};

// suite: oracle | axis | exact | greedy | coreset | lower-bounds | all
VerifyResult verify_suite(const std::string& suite, const VerifyOptions& opts);
std::vector<std::string> verify_suite_names();

// Relative-slack comparison used for every asserted bound.
inline bool within_bound(double value, double bound) {
  return value <= bound * (1.0 + 1e-9) + 1e-12;
}

}  // namespace dlab
