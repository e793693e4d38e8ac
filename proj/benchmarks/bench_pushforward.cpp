#include <benchmark/benchmark.h>

#include "k0ring/pushforward.hpp"

namespace {

void BM_PowerMap(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const int N = static_cast<int>(state.range(2));
  for (auto _ : state) {
    for (int k = 0; k <= r; ++k) benchmark::DoNotOptimize(k0::pushforward_power_map(q, r, N, k));
  }
}
BENCHMARK(BM_PowerMap)
    ->Args({2, 1, 2})
    ->Args({2, 1, 6})
    ->Args({2, 3, 6})
    ->Args({3, 2, 6})
    ->Args({2, 3, 8})
    ->Unit(benchmark::kMillisecond);

void BM_ChartRewrite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k0::pushforward_on_moduli_chart(2, 1, 6, 0));
}
BENCHMARK(BM_ChartRewrite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
