#include "dlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "dlab/adversarial.hpp"
#include "dlab/rng.hpp"
#include "dlab/verify.hpp"

namespace dlab {

const char* const kCsvHeader =
    "instance_id,family,rule,k,n,m,q_regular,q_candidate,q_voter,"
    "q_gross_regular_equiv,sc_rule,sc_opt,dist_sc,ec_rule,ec_opt,dist_ec,"
    "runtime_ms";

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* placement_name(Placement p) {
  switch (p) {
    case Placement::kUniform: return "uniform";
    case Placement::kClustered: return "clustered";
    case Placement::kCollocatedFraction: return "collocated";
  }
  return "?";
}

}  // namespace

std::string format_csv_row(const CsvRow& row) {
  std::string out;
  out += row.instance_id;
  out += ',';
  out += row.family;
  out += ',';
  out += row.rule;
  out += ',' + std::to_string(row.k) + ',' + std::to_string(row.n) + ',' +
         std::to_string(row.m);
  out += ',' + std::to_string(row.q_regular) + ',' +
         std::to_string(row.q_candidate) + ',' + std::to_string(row.q_voter) +
         ',' + std::to_string(row.q_gross_regular_equiv);
  out += ',' + num(row.sc_rule) + ',' + num(row.sc_opt) + ',' +
         num(row.dist_sc);
  out += ',' + num(row.ec_rule) + ',' + num(row.ec_opt) + ',' +
         num(row.dist_ec);
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", row.runtime_ms);
  out += ',';
  out += ms;
  return out;
}

void write_csv(const std::vector<CsvRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const CsvRow& row : rows) out << format_csv_row(row) << '\n';
}

TrialResult run_trial(const Instance& instance, const std::string& rule_name,
                      int k, GapQueryMode mode) {
  const RuleEntry* rule = find_rule(rule_name);
  if (!rule) throw UnknownName("unknown rule '" + rule_name + "'");
  RankingProfile profile = derive_profile(instance);
  CandidateAxis axis = recover_axis(profile);
  ClusterTable table = clusters(profile, axis);
  GroundTruthOracle oracle(instance, axis, table);
  const auto start = std::chrono::steady_clock::now();
  TrialResult trial;
  if (rule_name == "full-axis-dp" && mode == GapQueryMode::kRegular)
    trial.output = rule_full_axis_dp(profile, axis, table, oracle, k, mode);
  else
    trial.output = rule->run(profile, axis, table, oracle, k);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  trial.report = evaluate(instance, k, rule_name, trial.output.committee,
                          oracle.ledger(), ms);
  trial.ledger = oracle.ledger();
  return trial;
}

CsvRow to_csv_row(const Instance& instance, const std::string& instance_id,
                  const std::string& family, const std::string& rule_name,
                  int k, const EvaluationReport& report) {
  CsvRow row;
  row.instance_id = instance_id;
  row.family = family;
  row.rule = rule_name;
  row.k = k;
  row.n = instance.n();
  row.m = instance.m();
  row.q_regular = report.queries.regular;
  row.q_candidate = report.queries.candidate;
  row.q_voter = report.queries.voter;
  row.q_gross_regular_equiv = report.queries.gross_regular_equiv;
  row.sc_rule = report.sc_rule;
  row.sc_opt = report.sc_opt;
  row.dist_sc = report.dist_sc;
  row.ec_rule = report.ec_rule;
  row.ec_opt = report.ec_opt;
  row.dist_ec = report.dist_ec;
  row.runtime_ms = report.runtime_ms;
  return row;
}

std::vector<std::string> bound_violations(const Instance& instance,
                                          const std::string& rule_name, int k,
                                          const TrialResult& trial) {
  std::vector<std::string> out;
  const EvaluationReport& r = trial.report;
  const long n = instance.n();
  const long m = instance.m();
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  check(static_cast<int>(r.committee.size()) == k, "committee size != k");
  if (rule_name == "extremes2") {
    check(within_bound(r.dist_sc, 2.0 * n - 2.0), "social distortion > 2n-2");
    check(r.queries.regular_equiv == 0, "extremes2 issued queries");
  } else if (rule_name == "median2") {
    check(within_bound(r.dist_sc, n + 1.0), "social distortion > n+1");
    check(r.queries.regular_equiv == 0, "median2 issued queries");
  } else if (rule_name == "two-of-three") {
    check(within_bound(r.dist_sc, 3.0), "social distortion > 3");
    check(r.queries.regular_equiv == 0, "two-of-three issued queries");
  } else if (rule_name == "greedy") {
    check(r.queries.candidate <= std::max(0L, 6L * k - 15),
          "greedy candidate queries > 6k-15");
    check(within_bound(r.dist_ec, 5.0), "egalitarian distortion > 5");
    check(within_bound(r.dist_sc, 5.0 * n), "social distortion > 5n");
  } else if (rule_name == "full-axis-dp") {
    check(r.queries.candidate <= m - 1 &&
              (r.queries.candidate > 0 || r.queries.regular_equiv <= m + 3),
          "full-axis-dp queries over budget");
    check(within_bound(r.dist_sc, 3.0), "social distortion > 3");
  } else if (rule_name == "coreset") {
    check(within_bound(r.dist_sc, 5.0), "social distortion > 5");
    check(r.queries.candidate <=
              coreset_query_cap(k, n, static_cast<int>(trial.output.good_set.size())),
          "coreset candidate queries over the derived ceiling");
    check(static_cast<double>(trial.output.partition.size()) <=
              coreset_interval_cap(k, n) + 1.0 + 1e-9,
          "coreset interval count over budget");
    if (!trial.output.good_set.empty()) {
      const double sc_retained =
          cost(instance, trial.output.good_set).social_cost;
      check(within_bound(sc_retained, 2.0 * r.sc_opt),
            "retained-set social cost > 2x optimum");
    }
  }
  return out;
}

void SweepConfig::validate() const {
  if (rules.empty()) throw BadParams("sweep needs at least one rule");
  for (const std::string& r : rules)
    if (!find_rule(r)) throw UnknownName("unknown rule '" + r + "'");
  if (trials < 1) throw BadParams("trials >= 1");
  if (k_min < 1 || k_min > k_max || n_min > n_max || m_min > m_max)
    throw BadParams("empty parameter range");
  if (k_min + 1 > m_max) throw BadParams("needs k+1 <= m");
  if (n_max < k_min + 1) throw BadParams("needs n >= k+1");
}

int sweep_thread_count(int requested) {
  int threads = requested;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    threads = std::min(threads, 8);
  }
  if (const char* env = std::getenv("DISTORTION_LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  return std::max(1, threads);
}

std::vector<CsvRow> run_sweep(const SweepConfig& config, int threads) {
  config.validate();
  const int total = config.trials;
  std::vector<std::vector<CsvRow>> slots(total);
  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= total) return;
      Rng rng = Rng(config.seed).fork(static_cast<std::uint64_t>(i));
      const int k = static_cast<int>(rng.int_in(config.k_min, config.k_max));
      const int m_lo = std::max(config.m_min, k + 1);
      const int m = static_cast<int>(
          rng.int_in(m_lo, std::max(m_lo, config.m_max)));
      int n_lo = std::max(config.n_min, k + 1);
      if (config.active_only) n_lo = std::max(n_lo, m);
      const int n = static_cast<int>(
          rng.int_in(n_lo, std::max(n_lo, config.n_max)));
      GenConfig gen;
      gen.n = n;
      gen.m = m;
      gen.placement = config.placement;
      gen.active_only = config.active_only;
      char id[64];
      std::snprintf(id, sizeof id, "rand-%llu-%06d",
                    static_cast<unsigned long long>(config.seed), i);
      gen.name = id;
      const Instance instance = random_instance(rng.fork(0xa11ce).next(), gen);
      for (const std::string& rule : config.rules) {
        TrialResult trial = run_trial(instance, rule, k);
        slots[i].push_back(to_csv_row(instance, id,
                                      placement_name(config.placement), rule,
                                      k, trial.report));
      }
    }
  };
  const int workers = std::min(sweep_thread_count(threads), total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  std::vector<CsvRow> rows;
  for (auto& slot : slots)
    for (CsvRow& row : slot) rows.push_back(std::move(row));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CsvRow& a, const CsvRow& b) {
                     if (a.instance_id != b.instance_id)
                       return a.instance_id < b.instance_id;
                     return a.rule < b.rule;
                   });
  return rows;
}

namespace {

VerifyResult from_check(const checks::CheckResult& check,
                        const VerifyOptions& opts) {
  VerifyResult result;
  result.suite = check.name;
  result.passed = check.passed;
  result.checks = check.checks;
  result.failures = check.failures;
  result.notes = check.notes;
  if (!check.passed && check.counterexample && !opts.counterexample_dir.empty()) {
    const std::string path =
        opts.counterexample_dir + "/counterexample-" + check.name + ".json";
    save_instance_file(*check.counterexample, path);
    result.counterexample_path = path;
  }
  return result;
}

int scaled(double scale, int full) {
  return std::max(1, static_cast<int>(full * scale));
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"oracle", "axis", "exact", "greedy", "coreset", "lower-bounds",
          "all"};
}

VerifyResult verify_suite(const std::string& suite, const VerifyOptions& opts) {
  using namespace checks;
  const std::uint64_t seed = opts.seed;
  const double s = opts.scale;
  auto combine = [&](std::vector<CheckResult> parts,
                     const std::string& name) {
    CheckResult all;
    all.name = name;
    for (const CheckResult& part : parts) all.merge(part);
    return from_check(all, opts);
  };
  if (suite == "oracle")
    return from_check(
        oracle_simulations(seed, scaled(s, 100), scaled(s, 10000)), opts);
  if (suite == "axis")
    return from_check(axis_recovery(seed, scaled(s, 500)), opts);
  if (suite == "exact")
    return from_check(exact_oracles(seed, scaled(s, 500)), opts);
  if (suite == "greedy") {
    auto [equiv, egal] = greedy_sweep(seed, scaled(s, 1000));
    return combine({equiv, egal, greedy_showcase(),
                    interval_routines(seed, scaled(s, 10000),
                                      IntervalRoutine::kDistant)},
                   "greedy");
  }
  if (suite == "coreset")
    return combine({interval_routines(seed, scaled(s, 10000),
                                      IntervalRoutine::kPartition),
                    coreset_guarantees(seed, scaled(s, 500))},
                   "coreset");
  if (suite == "lower-bounds")
    return combine({lower_bound_family(), k2_rules(seed, scaled(s, 500))},
                   "lower-bounds");
  if (suite == "all") {
    std::vector<std::string> names = verify_suite_names();
    names.pop_back();
    VerifyResult all;
    all.suite = "all";
    for (const std::string& name : names) {
      VerifyResult part = verify_suite(name, opts);
      all.passed = all.passed && part.passed;
      all.checks += part.checks;
      for (const std::string& f : part.failures)
        all.failures.push_back(name + ": " + f);
      for (const std::string& n : part.notes) all.notes.push_back(n);
      if (!all.counterexample_path && part.counterexample_path)
        all.counterexample_path = part.counterexample_path;
      if (opts.info)
        *opts.info << (part.passed ? "[pass] " : "[FAIL] ") << name << " ("
                   << part.checks << " checks)\n";
    }
    return all;
  }
  throw UnknownName("unknown verify suite '" + suite + "'");
}

}  // namespace dlab
