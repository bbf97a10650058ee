#include <doctest.h>

#include "dlab/exact.hpp"
#include "dlab/rng.hpp"
#include "dlab/rules.hpp"
#include "dlab/verify.hpp"

using namespace dlab;

namespace {

struct Setup {
  Instance instance;
  RankingProfile profile;
  CandidateAxis axis;
  ClusterTable table;

  explicit Setup(Instance inst) : instance(std::move(inst)) {
    profile = derive_profile(instance);
    axis = recover_axis(profile);
    table = clusters(profile, axis);
  }
  GroundTruthOracle oracle() const {
    return GroundTruthOracle(instance, axis, table);
  }
};

Instance make(std::vector<double> cands, std::vector<double> voters) {
  Instance inst;
  inst.candidates = std::move(cands);
  inst.voters = std::move(voters);
  return inst;
}

}  // namespace

TEST_CASE("partition_interval straddles the midpoint") {
  Setup s(make({0.0, 2.0, 6.0, 10.0}, {0.1, 2.1, 6.1, 9.8}));
  GroundTruthOracle oracle = s.oracle();
  SplitResult split =
      partition_interval(s.profile, s.axis, s.table, oracle, 0, 3);
  CHECK(split.left.right == 1);   // candidate at 2, left of midpoint 5
  CHECK(split.right.left == 2);   // candidate at 6, right of midpoint 5
  CHECK(split.left.length == 2.0);
  CHECK(split.right.length == 4.0);
  CHECK(split.left.voters + split.right.voters == 4);
  CHECK(oracle.ledger().issued_candidate <= 4);
}

TEST_CASE("partition_interval on a symmetric straddle") {
  Setup s(make({0.0, 4.0, 6.0, 10.0}, {0.1, 4.1, 6.1, 9.9}));
  GroundTruthOracle oracle = s.oracle();
  SplitResult split =
      partition_interval(s.profile, s.axis, s.table, oracle, 0, 3);
  CHECK(split.left.right == 1);
  CHECK(split.right.left == 2);
}

TEST_CASE("partition_interval rejects short intervals") {
  Setup s(make({0.0, 4.0, 6.0, 10.0}, {0.1, 4.1, 6.1, 9.9}));
  GroundTruthOracle oracle = s.oracle();
  CHECK_THROWS_AS(
      partition_interval(s.profile, s.axis, s.table, oracle, 0, 2),
      IntervalTooSmall);
}

TEST_CASE("partition_interval matches the true straddle on random intervals") {
  checks::CheckResult result = checks::interval_routines(
      777, 2000, checks::IntervalRoutine::kPartition);
  for (const std::string& f : result.failures) FAIL_CHECK(f);
  CHECK(result.passed);
}

TEST_CASE("coreset guarantees on a reduced sweep") {
  checks::CheckResult result = checks::coreset_guarantees(424242, 80);
  for (const std::string& f : result.failures) FAIL_CHECK(f);
  CHECK(result.passed);
}

TEST_CASE("coreset rejects k below 3") {
  Rng rng(11);
  GenConfig cfg;
  cfg.m = 8;
  cfg.n = 10;
  cfg.active_only = true;
  Setup s(random_instance(rng.next(), cfg));
  GroundTruthOracle oracle = s.oracle();
  CHECK_THROWS_AS(rule_coreset(s.profile, s.axis, s.table, oracle, 2),
                  KOutOfRange);
}

TEST_CASE("coreset artifacts are internally consistent") {
  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    const int k = static_cast<int>(rng.int_in(3, 6));
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(3 * k, 60));
    cfg.n = static_cast<int>(rng.int_in(cfg.m, 140));
    cfg.active_only = true;
    Setup s(random_instance(rng.next(), cfg));
    GroundTruthOracle oracle = s.oracle();
    RuleOutput out = rule_coreset(s.profile, s.axis, s.table, oracle, k);
    CHECK(static_cast<int>(out.committee.size()) == k);
    CHECK(out.delta_star > 0.0);
    long voters = 0;
    for (const AxisInterval& iv : out.partition) {
      voters += iv.voters;
      if (iv.candidate_count() > 1) CHECK(iv.length > 0.0);
    }
    CHECK(voters == s.instance.n());
    // Retained candidates: all of every short interval, endpoints otherwise.
    std::size_t expect = 0;
    for (const AxisInterval& iv : out.partition)
      expect += iv.candidate_count() > 3 ? 2 : iv.candidate_count();
    CHECK(out.good_set.size() == expect);
  }
}
