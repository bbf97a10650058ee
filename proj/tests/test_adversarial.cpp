#include <doctest.h>

#include <cmath>

#include "dlab/adversarial.hpp"
#include "dlab/exact.hpp"
#include "dlab/verify.hpp"

using namespace dlab;

namespace {

std::vector<double> gaps_of(const Instance& inst) {
  std::vector<double> gaps;
  for (int i = 0; i + 1 < inst.m(); ++i)
    gaps.push_back(inst.candidates[i + 1] - inst.candidates[i]);
  return gaps;
}

}  // namespace

TEST_CASE("query lower-bound family: basic gap structure") {
  const double spread = 1000.0;
  const double eps = 1e-3;
  const double wide = spread * spread;
  const double unit = 3.0 * spread + eps;
  Instance basic = gen_query_lb(6, spread, eps, 0);
  REQUIRE(basic.m() == 10);
  REQUIRE(basic.n() == 10);
  const std::vector<double> want = {1.0,  wide, 1.0, wide + unit,     1.0,
                                    wide + 2 * unit, 1.0, wide + 3 * unit,
                                    1.0};
  const std::vector<double> got = gaps_of(basic);
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  // Near-pair gaps are bit-exact; the optimum social cost counts on it.
  for (std::size_t i = 0; i < got.size(); i += 2) CHECK(got[i] == 1.0);
  CHECK(basic.voters == basic.candidates);
}

TEST_CASE("query lower-bound family: variant moves exactly one candidate") {
  const double spread = 1000.0;
  Instance basic = gen_query_lb(6, spread, 1e-3, 0);
  Instance first = gen_query_lb(6, spread, 1e-3, 1);
  std::vector<double> g = gaps_of(first);
  CHECK(g[0] == spread + 1.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] == gaps_of(basic)[i]);

  for (int j = 1; j <= 10; ++j) {
    Instance variant = gen_query_lb(6, spread, 1e-3, j);
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b) {
        const double basic_d = basic.candidates[b] - basic.candidates[a];
        const double variant_d = variant.candidates[b] - variant.candidates[a];
        if (a == j - 1 || b == j - 1)
          CHECK(std::abs(variant_d - basic_d) == spread);
        else
          CHECK(variant_d == basic_d);
      }
  }
}

TEST_CASE("query lower-bound family: parameter guards") {
  CHECK_THROWS_AS(gen_query_lb(2, 1000.0, 1e-3, 0), BadParams);
  CHECK_THROWS_AS(gen_query_lb(6, 10.0, 1e-3, 0), BadParams);
  CHECK_THROWS_AS(gen_query_lb(6, 1000.0, 0.5, 0), BadParams);
  CHECK_THROWS_AS(gen_query_lb(6, 1000.0, 1e-3, 11), BadParams);
}

TEST_CASE("check_indistinguishable") {
  std::vector<Instance> family;
  for (int j = 0; j <= 10; ++j)
    family.push_back(gen_query_lb(6, 1000.0, 1e-3, j));
  auto [same, witness] = check_indistinguishable(family);
  CHECK(same);

  SUBCASE("a shell-crossing stretch is visible in the profile") {
    Instance stretched = family[0];
    // Move the first candidate far left so its distances land in the next
    // shell of every other voter's ranking.
    const double shift = 3.0 * 1000.0 * 1000.0;
    stretched.candidates[0] -= shift;
    stretched.voters[0] -= shift;
    auto [still_same, diff] =
        check_indistinguishable({family[0], stretched});
    CHECK_FALSE(still_same);
    CHECK(diff.voter >= 0);
    CHECK(diff.rank >= 0);
  }
  SUBCASE("a single instance is trivially indistinguishable") {
    CHECK(check_indistinguishable({family[0]}).first);
    CHECK(check_indistinguishable({}).first);
  }
  SUBCASE("shape mismatch is rejected") {
    CHECK_THROWS_AS(
        check_indistinguishable({family[0], gen_query_lb(5, 1000.0, 1e-3, 0)}),
        ShapeMismatch);
  }
}

TEST_CASE("far_pair_penalty") {
  CHECK(far_pair_penalty(gen_query_lb(4, 1000.0, 1e-3, 2), 4) >= 1000.0);
  CHECK(far_pair_penalty(gen_query_lb(6, 1000.0, 1e-3, 1), 6) >= 1000.0);
  CHECK_THROWS_AS(far_pair_penalty(gen_query_lb(6, 1000.0, 1e-3, 0), 6),
                  BadInstance);
  CHECK(far_pair_of_variant(6, 1) == std::pair<int, int>{0, 1});
  CHECK(far_pair_of_variant(6, 4) == std::pair<int, int>{2, 3});
}

TEST_CASE("k=2 family: ranking groups and the 2t+3 distortion") {
  const double eps = 1e-4;
  Instance inst = gen_2fac_lb(3, 1.0 + eps, 1.0, eps, TwoFacCase::kAB);
  REQUIRE(inst.n() == 8);
  RankingProfile profile = derive_profile(inst);
  // Groups: t voters b>c>d>a, t voters c>d>b>a, one a>b>c>d, one d>c>b>a.
  int group_b = 0, group_c = 0, group_a = 0, group_d = 0;
  for (int v = 0; v < inst.n(); ++v) {
    const auto& r = profile.ranked[v];
    if (r == std::vector<int>{1, 2, 3, 0}) ++group_b;
    if (r == std::vector<int>{2, 3, 1, 0}) ++group_c;
    if (r == std::vector<int>{0, 1, 2, 3}) ++group_a;
    if (r == std::vector<int>{3, 2, 1, 0}) ++group_d;
  }
  CHECK(group_b == 3);
  CHECK(group_c == 3);
  CHECK(group_a == 1);
  CHECK(group_d == 1);

  EvaluationReport report =
      evaluate(inst, 2, "pair-ab", Committee{0, 1}, QueryLedger{});
  CHECK(std::abs(report.dist_sc - 9.0) < 1e-2);  // 2t + 3
}

TEST_CASE("k=2 family: electing the middle pair pays for the long left gap") {
  const double y = 1.0, z = 0.5;
  double previous = 0.0;
  for (double x : {10.0, 100.0, 1000.0}) {
    Instance inst = gen_2fac_lb(3, x, y, z, TwoFacCase::kBC);
    EvaluationReport report =
        evaluate(inst, 2, "pair-bc", Committee{1, 2}, QueryLedger{});
    CHECK(report.dist_sc > previous);
    previous = report.dist_sc;
  }
  CHECK(previous > 100.0);
}

TEST_CASE("k=2 family parameter guards") {
  CHECK_THROWS_AS(gen_2fac_lb(0, 2.0, 1.0, 0.5, TwoFacCase::kAB), BadParams);
  CHECK_THROWS_AS(gen_2fac_lb(1, 1.0, 1.0, 0.5, TwoFacCase::kAB), BadParams);
  CHECK_THROWS_AS(gen_2fac_lb(1, 2.0, 0.4, 0.5, TwoFacCase::kAB), BadParams);
  CHECK_THROWS_AS(two_fac_case_from_name("zz"), UnknownName);
}

TEST_CASE("k=m-1 family: only dropping the far candidate is cheap") {
  Instance inst = gen_3fac_lb(100.0);
  CHECK(brute_force_opt(inst, 3, Objective::kSocialCost).second ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(cost(inst, {1, 2, 3}).social_cost >= 100.0 - 1e-3);
  CHECK(cost(inst, {0, 2, 3}).social_cost >= 100.0 - 1e-3);
  CHECK_THROWS_AS(gen_3fac_lb(5.0), BadParams);
}

TEST_CASE("tightness instances") {
  SUBCASE("greedy showcase positions") {
    TightnessParams params;
    params.n = 10;
    params.eps = 1e-6;
    Instance inst = gen_tightness("greedy-remark", params);
    const double e = params.eps;
    CHECK(inst.candidates ==
          std::vector<double>{0.0, 1.0, 2.0 + e, 4.0 + 3 * e, 8.0 + 4 * e});
    CHECK(inst.n() == 10);
    Instance med = gen_tightness("greedy-remark-medianized", params);
    CHECK(med.candidates == inst.candidates);
  }
  SUBCASE("median tightness optimum") {
    TightnessParams params;
    params.n = 8;
    params.eps = 1e-6;
    Instance inst = gen_tightness("median-tight", params);
    const double opt =
        optimal_committee(inst, 2, Objective::kSocialCost).second;
    CHECK(opt == doctest::Approx(0.5 + 2 * params.eps).epsilon(1e-12));
  }
  SUBCASE("unknown names are rejected") {
    CHECK_THROWS_AS(gen_tightness("nope", TightnessParams{}), UnknownName);
  }
  SUBCASE("every family derives a strict profile") {
    TightnessParams params;
    params.n = 8;
    for (const std::string& name : tightness_names()) {
      Instance inst = gen_tightness(name, params);
      CHECK_NOTHROW(derive_profile(inst));
    }
    for (int j = 0; j <= 6; ++j)
      CHECK_NOTHROW(derive_profile(gen_query_lb(4, 1000.0, 1e-3, j)));
    CHECK_NOTHROW(derive_profile(gen_2fac_lb(2, 2.0, 1.0, 0.5,
                                             TwoFacCase::kCD)));
    CHECK_NOTHROW(derive_profile(gen_3fac_lb(50.0)));
  }
}

TEST_CASE("lower-bound families meet every documented number") {
  checks::CheckResult result = checks::lower_bound_family();
  for (const std::string& f : result.failures) FAIL_CHECK(f);
  CHECK(result.passed);
}
