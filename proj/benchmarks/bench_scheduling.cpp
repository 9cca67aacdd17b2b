#include <benchmark/benchmark.h>

#include "tardy/generators.hpp"
#include "tardy/multi_machine.hpp"
#include "tardy/single_machine.hpp"

// range(0) = n, range(1) = p_max
static tardy::NormalizedInstance instance(const benchmark::State& state, int machines = 1) {
  return tardy::normalize_instance(tardy::tight_deadlines(
      static_cast<std::size_t>(state.range(0)), state.range(1), 29, machines));
}

static void BM_PmaxCubed(benchmark::State& state) {
  const auto inst = instance(state);
  for (auto _ : state) benchmark::DoNotOptimize(tardy::pmax_cubed_solve(inst));
}

static void BM_LawlerMoore(benchmark::State& state) {
  const auto inst = instance(state);
  for (auto _ : state) benchmark::DoNotOptimize(tardy::lawler_moore(inst));
}

static void BM_PmDp(benchmark::State& state) {
  const auto inst = instance(state, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tardy::pm_dp_solve(inst, 2));
}

BENCHMARK(BM_PmaxCubed)->ArgsProduct({{1000, 10000, 100000}, {4, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawlerMoore)->ArgsProduct({{1000, 10000}, {4, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PmDp)->ArgsProduct({{100, 1000}, {3, 5}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
