#include <benchmark/benchmark.h>

#include "sl4cube/cube.hpp"
#include "sl4cube/decompose.hpp"
#include "sl4cube/special.hpp"
#include "sl4cube/suites.hpp"

using namespace sl4cube;

static void BM_CalPSum(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const TransitionKey key{N, {N / 3, N / 3, N - 2 * (N / 3) - N / 4}, {N / 4, N / 2, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(calP_sum(key));
}
BENCHMARK(BM_CalPSum)->DenseRange(2, 8, 2);

// calP_genfunc memoizes the whole degree-N table; steady state is a lookup.
static void BM_CalPGenfunc(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const TransitionKey key{N, {N / 3, N / 3, N - 2 * (N / 3) - N / 4}, {N / 4, N / 2, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(calP_genfunc(key));
}
BENCHMARK(BM_CalPGenfunc)->DenseRange(2, 8, 2);

static void BM_Krawtchouk(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(krawtchouk(N));
}
BENCHMARK(BM_Krawtchouk)->Arg(4)->Arg(16)->Arg(64);

static void BM_GradedDecomposition(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_decomposition(1, N));
}
BENCHMARK(BM_GradedDecomposition)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_TAlgebra(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Hypercube cube(N);
  for (auto _ : state) {
    TAlgebra T(cube, 0);
    benchmark::DoNotOptimize(wedderburn(T));
  }
}
BENCHMARK(BM_TAlgebra)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_SuiteSl4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::sl4, 0, {}));
}
BENCHMARK(BM_SuiteSl4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
