#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dlab/adversarial.hpp"
#include "dlab/instance.hpp"
#include "dlab/reference.hpp"
#include "dlab/rng.hpp"

using namespace dlab;

namespace {

Instance make(std::vector<double> cands, std::vector<double> voters) {
  Instance inst;
  inst.candidates = std::move(cands);
  inst.voters = std::move(voters);
  return inst;
}

}  // namespace

TEST_CASE("derive_profile ranks by distance") {
  Instance inst = make({0.0, 5.0}, {0.0});
  RankingProfile profile = derive_profile(inst);
  CHECK(profile.ranked[0] == std::vector<int>{0, 1});
}

TEST_CASE("derive_profile on the k=6 lower-bound instance") {
  // Collocated voter at the 4th candidate; partner first, then the rest of
  // the near shell left-to-right, then the farther shells.
  Instance inst = gen_query_lb(6, 1000.0, 1e-3, 0);
  RankingProfile profile = derive_profile(inst);
  CHECK(profile.ranked[3] ==
        std::vector<int>{3, 2, 1, 0, 4, 5, 6, 7, 8, 9});
  for (int v = 0; v < inst.n(); ++v)
    CHECK(profile.ranked[v] ==
          reference::ranking_by_pairwise_counts(inst, v));
}

TEST_CASE("derive_profile equals the pairwise-count oracle on random instances") {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(2, 12));
    cfg.n = static_cast<int>(rng.int_in(1, 20));
    Instance inst = random_instance(rng.next(), cfg);
    RankingProfile profile = derive_profile(inst);
    for (int v = 0; v < inst.n(); ++v)
      CHECK(profile.ranked[v] ==
            reference::ranking_by_pairwise_counts(inst, v));
  }
}

TEST_CASE("derive_profile rejects exact ties") {
  Instance inst = make({0.0, 2.0}, {1.0});
  CHECK_THROWS_AS(derive_profile(inst), TieDetected);
}

TEST_CASE("cost basics") {
  Instance inst = make({0.0, 4.0}, {0.0, 4.0, 4.0});
  CostReport zero = cost(inst, {0, 1});
  CHECK(zero.social_cost == 0.0);
  CHECK(zero.egalitarian_cost == 0.0);
  CHECK_THROWS_AS(cost(inst, {}), EmptyCommittee);
  CHECK_THROWS_AS(cost(inst, {0, 7}), InvalidId);
}

TEST_CASE("cost on the k=3 showcase instance at eps = 0") {
  // 10 voters: one at each extreme, a heavy group on the second candidate and
  // a lighter one on the third.
  Instance inst = make({0.0, 1.0, 2.0, 4.0, 8.0},
                       {0.0, 1.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 4.0, 8.0});
  CHECK(cost(inst, {0, 3, 4}).social_cost == 10.0);  // 3n/2 - 5
  CHECK(cost(inst, {1, 2, 4}).social_cost == 3.0);
}

TEST_CASE("random_instance is deterministic per seed") {
  GenConfig cfg;
  cfg.n = 20;
  cfg.m = 8;
  cfg.active_only = true;
  Instance a = random_instance(7, cfg);
  Instance b = random_instance(7, cfg);
  CHECK(a.candidates == b.candidates);
  CHECK(a.voters == b.voters);
  Instance c = random_instance(8, cfg);
  CHECK(a.voters != c.voters);
}

TEST_CASE("random_instance keeps every pairwise distance separated") {
  Rng rng(99);
  for (int t = 0; t < 1000; ++t) {
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(2, 10));
    cfg.n = static_cast<int>(rng.int_in(1, 12));
    cfg.placement = t % 3 == 0   ? Placement::kUniform
                    : t % 3 == 1 ? Placement::kClustered
                                 : Placement::kCollocatedFraction;
    Instance inst = random_instance(rng.next(), cfg);
    for (int v = 0; v < inst.n(); ++v) {
      std::vector<double> dist;
      for (double c : inst.candidates)
        dist.push_back(std::abs(inst.voters[v] - c));
      std::sort(dist.begin(), dist.end());
      for (std::size_t i = 0; i + 1 < dist.size(); ++i)
        CHECK(dist[i + 1] - dist[i] >= kPositionMargin);
    }
  }
}

TEST_CASE("random_instance active-only leaves no empty cluster") {
  Rng rng(123);
  for (int t = 0; t < 1000; ++t) {
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(2, 10));
    cfg.n = static_cast<int>(rng.int_in(cfg.m, cfg.m + 12));
    cfg.active_only = true;
    Instance inst = random_instance(rng.next(), cfg);
    RankingProfile profile = derive_profile(inst);
    std::vector<int> count(inst.m(), 0);
    for (int v = 0; v < inst.n(); ++v) ++count[profile.top(v)];
    for (int c = 0; c < inst.m(); ++c) CHECK(count[c] > 0);
  }
}

TEST_CASE("random_instance rejects impossible configurations") {
  GenConfig cfg;
  cfg.n = 3;
  cfg.m = 5;
  cfg.active_only = true;
  CHECK_THROWS_AS(random_instance(1, cfg), BadParams);
}

TEST_CASE("cost invariants on random instances") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(2, 10));
    cfg.n = static_cast<int>(rng.int_in(1, 16));
    Instance inst = random_instance(rng.next(), cfg);
    const int k = static_cast<int>(rng.int_in(1, inst.m()));
    std::vector<int> ids(inst.m());
    for (int i = 0; i < inst.m(); ++i) ids[i] = i;
    for (int i = inst.m() - 1; i > 0; --i)
      std::swap(ids[i], ids[rng.below(i + 1)]);
    Committee small(ids.begin(), ids.begin() + k);
    std::sort(small.begin(), small.end());
    CostReport report = cost(inst, small);
    // EC <= SC <= n * EC
    CHECK(report.egalitarian_cost <= report.social_cost + 1e-12);
    CHECK(report.social_cost <=
          inst.n() * report.egalitarian_cost + 1e-12);
    // Supersets cannot cost more.
    if (k < inst.m()) {
      Committee bigger = small;
      bigger.push_back(ids[k]);
      std::sort(bigger.begin(), bigger.end());
      CostReport more = cost(inst, bigger);
      CHECK(more.social_cost <= report.social_cost + 1e-12);
      CHECK(more.egalitarian_cost <= report.egalitarian_cost + 1e-12);
    }
    // Assignment really is the per-voter nearest member.
    for (int v = 0; v < inst.n(); ++v) {
      double best = std::numeric_limits<double>::infinity();
      for (int c : small)
        best = std::min(best, std::abs(inst.voters[v] - inst.candidates[c]));
      CHECK(std::abs(inst.voters[v] -
                     inst.candidates[report.assignment[v]]) == best);
    }
  }
}

TEST_CASE("profile rows decrease strictly in distance") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    GenConfig cfg;
    cfg.m = static_cast<int>(rng.int_in(2, 12));
    cfg.n = static_cast<int>(rng.int_in(1, 12));
    Instance inst = random_instance(rng.next(), cfg);
    RankingProfile profile = derive_profile(inst);
    for (int v = 0; v < inst.n(); ++v)
      for (int r = 0; r + 1 < inst.m(); ++r) {
        double a = std::abs(inst.voters[v] -
                            inst.candidates[profile.ranked[v][r]]);
        double b = std::abs(inst.voters[v] -
                            inst.candidates[profile.ranked[v][r + 1]]);
        CHECK(a < b);
      }
  }
}

TEST_CASE("instance files round-trip and the loader sorts candidates") {
  Instance inst = make({0.25, 1.5, 7.0}, {0.5, 6.0});
  inst.name = "roundtrip";
  std::stringstream buffer;
  save_instance(inst, buffer);
  LoadedInstance loaded = load_instance(buffer);
  CHECK(loaded.instance.candidates == inst.candidates);
  CHECK(loaded.instance.voters == inst.voters);
  CHECK(loaded.instance.name == "roundtrip");

  std::stringstream unsorted(
      R"({"name":"x","candidates":[7.0,0.25,1.5],"voters":[0.5]})");
  LoadedInstance sorted = load_instance(unsorted);
  CHECK(sorted.instance.candidates == std::vector<double>{0.25, 1.5, 7.0});
  CHECK(sorted.file_order == std::vector<int>{1, 2, 0});

  std::stringstream garbage("not json at all");
  CHECK_THROWS_AS(load_instance(garbage), IoError);
  std::stringstream missing(R"({"candidates":[1.0]})");
  CHECK_THROWS_AS(load_instance(missing), IoError);
  CHECK_THROWS_AS(load_instance_file("/nonexistent/path.json"), IoError);
}
