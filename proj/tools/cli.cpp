#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dlab/adversarial.hpp"
#include "dlab/harness.hpp"
#include "dlab/verify.hpp"

namespace dlab::cli {
namespace {

Placement placement_from(const std::string& name) {
  if (name == "uniform") return Placement::kUniform;
  if (name == "clustered") return Placement::kClustered;
  if (name == "collocated") return Placement::kCollocatedFraction;
  throw BadParams("unknown placement '" + name + "'");
}

struct GenArgs {
  std::string family;
  bool random = false;
  int k = 3;
  int variant = 0;
  int n = 10;
  int m = 5;
  std::uint64_t seed = 1;
  double eps = 0.0;  // 0: family default
  double spread = 0.0;
  int t = 3;
  double x = 0.0, y = 0.0, z = 0.0;
  std::string pair_case = "ab";
  std::string placement = "uniform";
  bool active_only = false;
  std::string out;
};

Instance build_instance(const GenArgs& a) {
  if (a.random) {
    GenConfig cfg;
    cfg.n = a.n;
    cfg.m = a.m;
    cfg.placement = placement_from(a.placement);
    cfg.active_only = a.active_only;
    cfg.name = "random-" + std::to_string(a.seed);
    return random_instance(a.seed, cfg);
  }
  if (a.family == "query-lb") {
    const double spread = a.spread > 0.0 ? a.spread : kDefaultLbSpread;
    const double eps = a.eps > 0.0 ? a.eps : default_lb_epsilon(a.k);
    return gen_query_lb(a.k, spread, eps, a.variant);
  }
  if (a.family == "2fac-lb") {
    const double eps = a.eps > 0.0 ? a.eps : 1e-6;
    const double x = a.x > 0.0 ? a.x : 1.0 + eps;
    const double y = a.y > 0.0 ? a.y : 1.0;
    const double z = a.z > 0.0 ? a.z : eps;
    return gen_2fac_lb(a.t, x, y, z, two_fac_case_from_name(a.pair_case));
  }
  if (a.family == "3fac-lb")
    return gen_3fac_lb(a.spread > 0.0 ? a.spread : 100.0);
  TightnessParams params;
  params.n = a.n;
  if (a.eps > 0.0) params.eps = a.eps;
  if (a.spread > 0.0) params.spread = a.spread;
  return gen_tightness(a.family, params);
}

void print_summary(std::ostream& out, const Instance& instance) {
  out << "instance: " << instance.name << "\n"
      << "n = " << instance.n() << ", m = " << instance.m() << "\n";
  try {
    RankingProfile profile = derive_profile(instance);
    CandidateAxis axis = recover_axis(profile);
    ClusterTable table = clusters(profile, axis);
    out << "active candidates: " << table.active_count << "\n";
    out << "axis:";
    for (int c : axis.order) out << ' ' << c;
    out << "\n";
  } catch (const Error& e) {
    out << "axis: unavailable (" << e.what() << ")\n";
  }
}

int cmd_gen(const GenArgs& args) {
  Instance instance = build_instance(args);
  if (!args.out.empty())
    save_instance_file(instance, args.out);
  else
    save_instance(instance, std::cout);
  print_summary(std::cerr, instance);
  return 0;
}

struct RunArgs {
  std::string in;
  std::string rule;
  int k = 2;
  std::string query_mode = "candidate";
  bool assert_bounds = false;
  std::string out;
  std::string query_log;
};

int cmd_run(const RunArgs& args) {
  Instance instance = load_instance_file(args.in).instance;
  const GapQueryMode mode = args.query_mode == "regular"
                                ? GapQueryMode::kRegular
                                : GapQueryMode::kCandidate;
  TrialResult trial = run_trial(instance, args.rule, args.k, mode);
  if (!args.query_log.empty()) {
    std::ofstream log(args.query_log);
    if (!log) throw IoError("cannot write " + args.query_log);
    write_query_log(trial.ledger, log);
  }
  const EvaluationReport& r = trial.report;
  std::cout << "rule: " << args.rule << "  k = " << args.k << "\n";
  std::cout << "committee:";
  for (int c : r.committee) std::cout << ' ' << c;
  std::cout << "\n";
  std::cout << "social cost " << r.sc_rule << " (optimal " << r.sc_opt
            << ", distortion " << r.dist_sc << ")\n";
  std::cout << "egalitarian cost " << r.ec_rule << " (optimal " << r.ec_opt
            << ", distortion " << r.dist_ec << ")\n";
  std::cout << "queries: regular " << r.queries.regular << ", candidate "
            << r.queries.candidate << ", voter " << r.queries.voter
            << " (regular-equivalent " << r.queries.regular_equiv << ")\n";
  CsvRow row = to_csv_row(instance, instance.name, "file", args.rule, args.k, r);
  std::cout << kCsvHeader << "\n" << format_csv_row(row) << "\n";
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) throw IoError("cannot write " + args.out);
    write_csv({row}, out);
  }
  if (args.assert_bounds) {
    std::vector<std::string> violations =
        bound_violations(instance, args.rule, args.k, trial);
    if (!violations.empty()) {
      const std::string replay = args.in + ".violation.json";
      save_instance_file(instance, replay);
      for (const std::string& v : violations)
        std::cerr << "bound violated: " << v << "\n";
      std::cerr << "instance persisted to " << replay << "\n";
      return 3;
    }
  }
  return 0;
}

struct SweepArgs {
  std::string config_path;
  std::string rules = "extremes2,median2";
  int k_min = 2, k_max = 2;
  int n_min = 4, n_max = 20;
  int m_min = 3, m_max = 10;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string placement = "uniform";
  bool active_only = false;
  std::string out = "sweep.csv";
  int threads = 0;
};

SweepConfig to_config(const SweepArgs& args) {
  SweepConfig config;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw IoError("cannot open " + args.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("bad sweep config: ") + e.what());
    }
    config.rules = j.value("rules", std::vector<std::string>{});
    config.k_min = j.value("k_min", args.k_min);
    config.k_max = j.value("k_max", args.k_max);
    config.n_min = j.value("n_min", args.n_min);
    config.n_max = j.value("n_max", args.n_max);
    config.m_min = j.value("m_min", args.m_min);
    config.m_max = j.value("m_max", args.m_max);
    config.trials = j.value("trials", args.trials);
    config.seed = j.value("seed", args.seed);
    config.placement = placement_from(j.value("placement", args.placement));
    config.active_only = j.value("active_only", args.active_only);
    config.out = j.value("out", args.out);
    return config;
  }
  std::stringstream names(args.rules);
  std::string name;
  while (std::getline(names, name, ','))
    if (!name.empty()) config.rules.push_back(name);
  config.k_min = args.k_min;
  config.k_max = args.k_max;
  config.n_min = args.n_min;
  config.n_max = args.n_max;
  config.m_min = args.m_min;
  config.m_max = args.m_max;
  config.trials = args.trials;
  config.seed = args.seed;
  config.placement = placement_from(args.placement);
  config.active_only = args.active_only;
  config.out = args.out;
  return config;
}

int cmd_sweep(const SweepArgs& args) {
  SweepConfig config = to_config(args);
  std::vector<CsvRow> rows = run_sweep(config, args.threads);
  std::ofstream out(config.out);
  if (!out) throw IoError("cannot write " + config.out);
  write_csv(rows, out);
  std::cout << rows.size() << " rows -> " << config.out << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 20240901;
  double scale = 1.0;
  std::string out_dir = ".";
};

int cmd_verify(const VerifyArgs& args) {
  VerifyOptions opts;
  opts.seed = args.seed;
  opts.scale = args.scale;
  opts.counterexample_dir = args.out_dir;
  opts.info = &std::cout;
  VerifyResult result = verify_suite(args.suite, opts);
  std::cout << (result.passed ? "[pass] " : "[FAIL] ") << result.suite << " ("
            << result.checks << " checks)\n";
  for (const std::string& f : result.failures) std::cout << "  " << f << "\n";
  for (const std::string& n : result.notes) std::cout << "  note: " << n << "\n";
  if (result.counterexample_path)
    std::cout << "counterexample: " << *result.counterexample_path << "\n";
  return result.passed ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"distortion-lab: committee election on the line with metered "
               "distance queries"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_flag("--random", gen.random, "random instance");
  gen_cmd->add_option("--family", gen.family,
                      "query-lb | 2fac-lb | 3fac-lb | extremes-tight | "
                      "median-tight | greedy-remark | "
                      "greedy-remark-medianized | two-of-three-lb-{a,b,c}");
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--variant", gen.variant);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--eps", gen.eps);
  gen_cmd->add_option("--spread", gen.spread);
  gen_cmd->add_option("--t", gen.t);
  gen_cmd->add_option("--x", gen.x);
  gen_cmd->add_option("--y", gen.y);
  gen_cmd->add_option("--z", gen.z);
  gen_cmd->add_option("--case", gen.pair_case, "ab|ac|ad|bc|bd|cd");
  gen_cmd->add_option("--placement", gen.placement,
                      "uniform | clustered | collocated");
  gen_cmd->add_flag("--active-only", gen.active_only);
  gen_cmd->add_option("--out", gen.out);

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "run one rule on an instance");
  run_cmd->add_option("--in", run_args.in)->required();
  run_cmd->add_option("--rule", run_args.rule)->required();
  run_cmd->add_option("--k", run_args.k);
  run_cmd->add_option("--query-mode", run_args.query_mode,
                      "candidate | regular (full-axis-dp only)");
  run_cmd->add_flag("--assert-bounds", run_args.assert_bounds);
  run_cmd->add_option("--out", run_args.out);
  run_cmd->add_option("--query-log", run_args.query_log,
                      "dump the full query log as CSV");

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "evaluate rules over random instances");
  sweep_cmd->add_option("--config", sweep.config_path, "JSON config file");
  sweep_cmd->add_option("--rules", sweep.rules, "comma-separated rule names");
  sweep_cmd->add_option("--k-min", sweep.k_min);
  sweep_cmd->add_option("--k-max", sweep.k_max);
  sweep_cmd->add_option("--n-min", sweep.n_min);
  sweep_cmd->add_option("--n-max", sweep.n_max);
  sweep_cmd->add_option("--m-min", sweep.m_min);
  sweep_cmd->add_option("--m-max", sweep.m_max);
  sweep_cmd->add_option("--trials", sweep.trials);
  sweep_cmd->add_option("--seed", sweep.seed);
  sweep_cmd->add_option("--placement", sweep.placement);
  sweep_cmd->add_flag("--active-only", sweep.active_only);
  sweep_cmd->add_option("--out", sweep.out);
  sweep_cmd->add_option("--threads", sweep.threads);

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify.suite,
                         "oracle | axis | exact | greedy | coreset | "
                         "lower-bounds | all");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--scale", verify.scale,
                         "trial-count multiplier (1 = full volume)");
  verify_cmd->add_option("--out-dir", verify.out_dir,
                         "where to persist counterexamples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (run_cmd->parsed()) return cmd_run(run_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (verify_cmd->parsed()) return cmd_verify(verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dlab::cli
