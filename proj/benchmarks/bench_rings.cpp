#include <benchmark/benchmark.h>

#include "k0ring/moduli.hpp"

namespace {

using namespace k0;

void BM_OpenModuli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_k0_m2());
}
BENCHMARK(BM_OpenModuli)->Unit(benchmark::kMillisecond);

void BM_ClassifyingStack(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_k0_bg());
}
BENCHMARK(BM_ClassifyingStack)->Unit(benchmark::kMillisecond);

void BM_BoundaryDivisor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_k0_delta1());
}
BENCHMARK(BM_BoundaryDivisor)->Unit(benchmark::kSecond)->Iterations(1);

void BM_Complement(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_k0_complement());
}
BENCHMARK(BM_Complement)->Unit(benchmark::kMillisecond);

void BM_CompactifiedModuli(benchmark::State& state) {
  const auto delta1 = build_k0_delta1();
  const auto complement = build_k0_complement();
  for (auto _ : state) benchmark::DoNotOptimize(build_k0_mbar2(delta1, complement));
}
BENCHMARK(BM_CompactifiedModuli)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
