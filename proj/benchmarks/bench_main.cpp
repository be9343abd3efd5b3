#include "fairslice/approx.hpp"
#include "fairslice/discretize.hpp"
#include "fairslice/fpt.hpp"
#include "fairslice/generators.hpp"
#include "fairslice/nonconnected.hpp"

#include <benchmark/benchmark.h>

using namespace fairslice;

namespace {

void BM_discretization(benchmark::State& state) {
  auto instance = gen_random(4, 4, false, 1);
  Rational eps(1, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_discretization(instance, eps));
  }
}
BENCHMARK(BM_discretization)->Arg(8)->Arg(32)->Arg(128);

void BM_subset_dp_util(benchmark::State& state) {
  auto D = gen_random_discrete(static_cast<int>(state.range(0)), 16, 9, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpt_util_discrete(D));
  }
}
BENCHMARK(BM_subset_dp_util)->Arg(4)->Arg(8)->Arg(12);

void BM_subset_dp_egal(benchmark::State& state) {
  auto D = gen_random_discrete(static_cast<int>(state.range(0)), 16, 9, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egal_exact_discrete(D));
  }
}
BENCHMARK(BM_subset_dp_egal)->Arg(4)->Arg(8)->Arg(12);

void BM_greedy_grant_loop(benchmark::State& state) {
  auto D = gen_random_discrete(4, static_cast<int>(state.range(0)), 9, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_util_discrete(D));
  }
}
BENCHMARK(BM_greedy_grant_loop)->Arg(16)->Arg(64)->Arg(256);

void BM_rational_simplex(benchmark::State& state) {
  auto instance = gen_random(static_cast<int>(state.range(0)), 4, false, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(egal_nonconnected(instance));
  }
}
BENCHMARK(BM_rational_simplex)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
