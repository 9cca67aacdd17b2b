#include <benchmark/benchmark.h>

#include "tardy/generators.hpp"
#include "tardy/skewed_convolution.hpp"

static void BM_SkewedFast(benchmark::State& state) {
  const auto in = tardy::conv_random(static_cast<std::size_t>(state.range(0)), 1'000'000, 17);
  for (auto _ : state) benchmark::DoNotOptimize(tardy::skewed_maxmin_convolution(in));
  state.SetComplexityN(state.range(0));
}

static void BM_SkewedNaive(benchmark::State& state) {
  const auto in = tardy::conv_random(static_cast<std::size_t>(state.range(0)), 1'000'000, 17);
  for (auto _ : state) benchmark::DoNotOptimize(tardy::naive_skewed_convolution(in));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_SkewedFast)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SkewedNaive)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
