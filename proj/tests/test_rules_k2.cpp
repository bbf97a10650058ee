#include <doctest.h>

#include <cmath>

#include "dlab/adversarial.hpp"
#include "dlab/exact.hpp"
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
};

Instance make(std::vector<double> cands, std::vector<double> voters) {
  Instance inst;
  inst.candidates = std::move(cands);
  inst.voters = std::move(voters);
  return inst;
}

}  // namespace

TEST_CASE("extremes rule elects the two active extremes") {
  Setup s(make({0.0, 3.0, 10.0, 40.0}, {2.8, 10.5}));
  RuleOutput out = rule_extremes(s.profile, s.axis, s.table);
  CHECK(out.committee == Committee{1, 2});

  Setup tight(make({0.0, 2.0, 100.0}, {1.0 - 1e-6, 2.0, 2.0, 2.0, 100.0}));
  RuleOutput wide = rule_extremes(tight.profile, tight.axis, tight.table);
  CHECK(wide.committee == Committee{0, 2});
  CHECK(cost(tight.instance, wide.committee).social_cost ==
        doctest::Approx(7.0).epsilon(1e-5));

  Setup lonely(make({0.0, 5.0}, {0.2, 0.3}));
  CHECK_THROWS_AS(rule_extremes(lonely.profile, lonely.axis, lonely.table),
                  TooFewActive);
}

TEST_CASE("median rule on two pure clusters") {
  Setup s(make({0.0, 4.0, 9.0}, {0.1, 0.2, 8.9, 9.3, 9.4}));
  RuleOutput out = rule_median_clusters(s.profile, s.axis, s.table);
  CHECK(out.committee == Committee{0, 2});
}

TEST_CASE("median rule reproduces its tightness committee") {
  TightnessParams params;
  params.n = 8;
  params.eps = 1e-6;
  Setup s(gen_tightness("median-tight", params));
  RuleOutput out = rule_median_clusters(s.profile, s.axis, s.table);
  CHECK(out.committee == Committee{0, 2});
  CHECK(cost(s.instance, out.committee).social_cost ==
        doctest::Approx(4.5).epsilon(1e-5));
}

TEST_CASE("two-of-three rule traces") {
  SUBCASE("one voter per ranking: first count elects a, second elects b") {
    // Profile {a>b>c, b>c>a, c>b>a}.
    Setup s(make({0.0, 2.0, 4.0}, {0.0, 2.1, 4.0}));
    RuleOutput out = rule_two_of_three(s.profile, s.axis, s.table);
    CHECK(out.committee == Committee{0, 1});
  }
  SUBCASE("unanimous b>c>a elects b, then a on the empty first count") {
    // Only b is active, so the axis is ambiguous; feed the true one.
    Instance inst = make({0.0, 2.0, 4.0}, {2.5, 2.6, 2.7});
    RankingProfile profile = derive_profile(inst);
    CandidateAxis axis = CandidateAxis::from_order({0, 1, 2});
    RuleOutput out = rule_two_of_three(profile, axis, clusters(profile, axis));
    CHECK(out.committee == Committee{0, 1});
  }
  SUBCASE("b winning both steps pulls in a") {
    // Rankings: one a>b>c, two b>a>c, one b>c>a, one c>b>a. Step 1 compares
    // 1 against 2 and elects b; step 2 compares 1 against 1 and elects b.
    Setup s(make({0.0, 2.0, 4.0}, {0.1, 1.4, 1.5, 2.9, 3.9}));
    RuleOutput out = rule_two_of_three(s.profile, s.axis, s.table);
    CHECK(out.committee == Committee{0, 1});
  }
  SUBCASE("wrong candidate count is rejected") {
    Setup s(make({0.0, 2.0, 4.0, 6.0}, {0.1, 2.1, 3.9, 6.1}));
    CHECK_THROWS_AS(rule_two_of_three(s.profile, s.axis, s.table), WrongM);
  }
}

TEST_CASE("k=2 rule guarantees on random instances and hard families") {
  checks::CheckResult result = checks::k2_rules(2207, 150);
  for (const std::string& f : result.failures) FAIL_CHECK(f);
  CHECK(result.passed);
}
