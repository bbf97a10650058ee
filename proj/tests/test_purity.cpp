#include <doctest.h>

#include "dlab/rng.hpp"
#include "dlab/rules.hpp"

using namespace dlab;

// Rules must reach positions only through the oracle. Re-running a rule
// against a replay oracle that merely echoes the recorded distance fetches
// (and holds no instance at all) must reproduce the committee exactly and
// consume the whole trace.
TEST_CASE("rules are pure functions of ordinal data and query answers") {
  Rng rng(515);
  for (int t = 0; t < 40; ++t) {
    const int k = static_cast<int>(rng.int_in(3, 6));
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(k + 2, 24));
    cfg.n = static_cast<int>(rng.int_in(cfg.m, cfg.m + 30));
    cfg.active_only = true;
    Instance inst = random_instance(rng.next(), cfg);
    RankingProfile profile = derive_profile(inst);
    CandidateAxis axis = recover_axis(profile);
    ClusterTable table = clusters(profile, axis);

    for (const char* name : {"greedy", "coreset", "full-axis-dp"}) {
      const RuleEntry* rule = find_rule(name);
      REQUIRE(rule != nullptr);
      GroundTruthOracle live(inst, axis, table);
      RuleOutput out = rule->run(profile, axis, table, live, k);
      ReplayOracle replay(live.fetch_trace(), inst.n(), inst.m(), axis, table);
      RuleOutput replayed = rule->run(profile, axis, table, replay, k);
      CHECK(replayed.committee == out.committee);
      CHECK(replay.exhausted());
    }
  }
}

TEST_CASE("a divergent replay is detected") {
  Rng rng(516);
  GenConfig cfg;
  cfg.m = 12;
  cfg.n = 18;
  cfg.active_only = true;
  Instance inst = random_instance(rng.next(), cfg);
  RankingProfile profile = derive_profile(inst);
  CandidateAxis axis = recover_axis(profile);
  ClusterTable table = clusters(profile, axis);
  GroundTruthOracle live(inst, axis, table);
  rule_greedy(profile, axis, table, live, 4);
  std::vector<QueryRecord> trace = live.fetch_trace();
  REQUIRE(!trace.empty());
  trace[0].id2 = (trace[0].id2 + 1) % inst.m();
  ReplayOracle replay(std::move(trace), inst.n(), inst.m(), axis, table);
  CHECK_THROWS_AS(rule_greedy(profile, axis, table, replay, 4),
                  ReplayMismatch);
}

TEST_CASE("ordinal-only rules issue no queries at all") {
  Rng rng(517);
  for (int t = 0; t < 20; ++t) {
    GenConfig cfg;
    cfg.m = 3;
    cfg.n = static_cast<int>(rng.int_in(3, 20));
    cfg.active_only = true;
    Instance inst = random_instance(rng.next(), cfg);
    RankingProfile profile = derive_profile(inst);
    CandidateAxis axis = recover_axis(profile);
    ClusterTable table = clusters(profile, axis);
    for (const char* name : {"extremes2", "median2", "two-of-three"}) {
      const RuleEntry* rule = find_rule(name);
      GroundTruthOracle oracle(inst, axis, table);
      rule->run(profile, axis, table, oracle, 2);
      CHECK(oracle.ledger().regular_equiv_gross == 0);
    }
  }
}

TEST_CASE("the regular-query gap reconstruction replays cleanly too") {
  Rng rng(518);
  GenConfig cfg;
  cfg.m = 10;
  cfg.n = 16;
  cfg.active_only = true;
  Instance inst = random_instance(rng.next(), cfg);
  RankingProfile profile = derive_profile(inst);
  CandidateAxis axis = recover_axis(profile);
  ClusterTable table = clusters(profile, axis);
  GroundTruthOracle live(inst, axis, table);
  RuleOutput out =
      rule_full_axis_dp(profile, axis, table, live, 4, GapQueryMode::kRegular);
  ReplayOracle replay(live.fetch_trace(), inst.n(), inst.m(), axis, table);
  RuleOutput replayed = rule_full_axis_dp(profile, axis, table, replay, 4,
                                          GapQueryMode::kRegular);
  CHECK(replayed.committee == out.committee);
  CHECK(replay.exhausted());
}
