#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dlab/harness.hpp"

using namespace dlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/dlab-test-") + name;
}

}  // namespace

TEST_CASE("csv header and row formatting") {
  CHECK(std::string(kCsvHeader) ==
        "instance_id,family,rule,k,n,m,q_regular,q_candidate,q_voter,"
        "q_gross_regular_equiv,sc_rule,sc_opt,dist_sc,ec_rule,ec_opt,dist_ec,"
        "runtime_ms");
  CsvRow row;
  row.instance_id = "x";
  row.family = "uniform";
  row.rule = "greedy";
  row.k = 3;
  row.n = 10;
  row.m = 5;
  row.q_candidate = 3;
  row.q_gross_regular_equiv = 9;
  row.sc_rule = 10.000003;
  row.sc_opt = 3.000002;
  row.dist_sc = 10.000003 / 3.000002;
  row.ec_rule = 2.000001;
  row.ec_opt = 1.000001;
  row.dist_ec = 2.000001 / 1.000001;
  row.runtime_ms = 0.25;
  CHECK(format_csv_row(row) ==
        "x,uniform,greedy,3,10,5,0,3,0,9,10.000003,3.000002,3.33333211111,"
        "2.000001,1.000001,1.999999,0.250");
  row.dist_sc = kInfiniteDistortion;
  CHECK(format_csv_row(row).find(",inf,") != std::string::npos);
}

TEST_CASE("run_trial wires the whole pipeline") {
  GenConfig cfg;
  cfg.n = 16;
  cfg.m = 8;
  cfg.active_only = true;
  Instance inst = random_instance(99, cfg);
  TrialResult trial = run_trial(inst, "greedy", 4);
  CHECK(trial.report.committee.size() == 4);
  CHECK(trial.report.dist_sc >= 1.0);
  CHECK(bound_violations(inst, "greedy", 4, trial).empty());
  CHECK_THROWS_AS(run_trial(inst, "no-such-rule", 4), UnknownName);
}

TEST_CASE("sweep emits one row per instance and rule, deterministically") {
  SweepConfig config;
  config.rules = {"extremes2", "median2", "greedy", "full-axis-dp"};
  config.k_min = config.k_max = 2;
  config.m_min = 4;
  config.m_max = 8;
  config.n_min = 6;
  config.n_max = 16;
  config.trials = 100;
  config.seed = 7;
  config.active_only = true;
  std::vector<CsvRow> rows = run_sweep(config, 4);
  REQUIRE(rows.size() == 400);
  std::vector<CsvRow> again = run_sweep(config, 1);
  REQUIRE(again.size() == 400);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(format_csv_row(rows[i]).substr(
              0, format_csv_row(rows[i]).rfind(',')) ==
          format_csv_row(again[i]).substr(
              0, format_csv_row(again[i]).rfind(',')));
  }
}

TEST_CASE("sweep config validation") {
  SweepConfig config;
  config.rules = {"greedy"};
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), BadParams);
  config.trials = 1;
  config.rules = {"bogus"};
  CHECK_THROWS_AS(config.validate(), UnknownName);
}

TEST_CASE("thread count respects the environment cap") {
  setenv("DISTORTION_LAB_THREADS", "2", 1);
  CHECK(sweep_thread_count(8) == 2);
  CHECK(sweep_thread_count(1) == 1);
  unsetenv("DISTORTION_LAB_THREADS");
  CHECK(sweep_thread_count(8) == 8);
}

TEST_CASE("cli: gen is byte-identical per seed") {
  const std::string out1 = temp_path("gen1.json");
  const std::string out2 = temp_path("gen2.json");
  CHECK(cli::run({"gen", "--random", "--n", "20", "--m", "8", "--seed", "7",
                  "--active-only", "--out", out1}) == 0);
  CHECK(cli::run({"gen", "--random", "--n", "20", "--m", "8", "--seed", "7",
                  "--active-only", "--out", out2}) == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("cli: family generation and run exit codes") {
  const std::string lb = temp_path("lb.json");
  CHECK(cli::run({"gen", "--family", "query-lb", "--k", "6", "--variant", "3",
                  "--out", lb}) == 0);
  CHECK(load_instance_file(lb).instance.m() == 10);

  const std::string remark = temp_path("remark.json");
  CHECK(cli::run({"gen", "--family", "greedy-remark", "--n", "10", "--out",
                  remark}) == 0);
  CHECK(cli::run({"run", "--in", remark, "--rule", "greedy", "--k", "3",
                  "--assert-bounds"}) == 0);
  const std::string rnd = temp_path("rnd.json");
  CHECK(cli::run({"gen", "--random", "--n", "40", "--m", "20", "--seed", "5",
                  "--active-only", "--out", rnd}) == 0);
  CHECK(cli::run({"run", "--in", rnd, "--rule", "coreset", "--k", "4",
                  "--assert-bounds"}) == 0);
  CHECK(cli::run({"run", "--in", rnd, "--rule", "full-axis-dp", "--k", "4",
                  "--query-mode", "regular", "--assert-bounds"}) == 0);
  // two-of-three on a 5-candidate instance violates its precondition.
  CHECK(cli::run({"run", "--in", remark, "--rule", "two-of-three", "--k",
                  "2"}) == 2);
  CHECK(cli::run({"run", "--in", remark, "--rule", "no-such-rule", "--k",
                  "2"}) == 2);
  CHECK(cli::run({"bogus-command"}) == 2);
}

TEST_CASE("cli: sweep via config file and verify") {
  const std::string cfg = temp_path("sweep.json");
  const std::string out = temp_path("sweep.csv");
  {
    std::ofstream f(cfg);
    f << R"({"rules":["extremes2","greedy"],"k_min":2,"k_max":2,)"
      << R"("n_min":6,"n_max":10,"m_min":4,"m_max":6,"trials":5,)"
      << R"("seed":3,"placement":"uniform","active_only":true,)"
      << R"("out":")" << out << R"("})";
  }
  CHECK(cli::run({"sweep", "--config", cfg}) == 0);
  std::string csv = slurp(out);
  CHECK(csv.rfind(kCsvHeader, 0) == 0);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 11);  // header + 5 instances x 2 rules

  CHECK(cli::run({"verify", "exact", "--scale", "0.05", "--out-dir",
                  "/tmp"}) == 0);
  CHECK(cli::run({"verify", "no-such-suite"}) == 2);
}
