#include <benchmark/benchmark.h>

#include "dlab/exact.hpp"
#include "dlab/rules.hpp"

namespace {

using namespace dlab;

struct Fixture {
  Instance instance;
  RankingProfile profile;
  CandidateAxis axis;
  ClusterTable table;
};

Fixture make_fixture(int n, int m) {
  GenConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.active_only = true;
  Fixture f;
  f.instance = random_instance(4242, cfg);
  f.profile = derive_profile(f.instance);
  f.axis = recover_axis(f.profile);
  f.table = clusters(f.profile, f.axis);
  return f;
}

void BM_DeriveProfile(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.m = static_cast<int>(state.range(1));
  cfg.active_only = true;
  Instance instance = random_instance(4242, cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(derive_profile(instance));
}
BENCHMARK(BM_DeriveProfile)->Args({100, 40})->Args({400, 200});

void BM_RecoverAxis(benchmark::State& state) {
  Fixture f = make_fixture(static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(recover_axis(f.profile));
}
BENCHMARK(BM_RecoverAxis)->Args({100, 40})->Args({400, 200});

void BM_Greedy(benchmark::State& state) {
  Fixture f = make_fixture(400, 200);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GroundTruthOracle oracle(f.instance, f.axis, f.table);
    benchmark::DoNotOptimize(
        rule_greedy(f.profile, f.axis, f.table, oracle, k));
  }
}
BENCHMARK(BM_Greedy)->Arg(4)->Arg(8);

void BM_Coreset(benchmark::State& state) {
  Fixture f = make_fixture(400, 200);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GroundTruthOracle oracle(f.instance, f.axis, f.table);
    benchmark::DoNotOptimize(
        rule_coreset(f.profile, f.axis, f.table, oracle, k));
  }
}
BENCHMARK(BM_Coreset)->Arg(3)->Arg(6);

void BM_OptimalCommittee(benchmark::State& state) {
  Fixture f = make_fixture(400, 200);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        optimal_committee(f.instance, k, Objective::kSocialCost));
}
BENCHMARK(BM_OptimalCommittee)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
