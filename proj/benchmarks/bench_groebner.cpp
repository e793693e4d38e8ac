#include <benchmark/benchmark.h>

#include "k0ring/moduli.hpp"
#include "k0ring/zgroebner.hpp"

namespace {

using namespace k0;

void BM_Cyclic3(benchmark::State& state) {
  const auto A = make_alphabet({"x", "y", "z"});
  auto P = [&](const char* s) { return LaurentPolynomial::parse(A, s); };
  const std::vector<LaurentPolynomial> gens{P("x + y + z"), P("x*y + y*z + z*x"),
                                            P("x*y*z - 1")};
  const auto ring = make_ring(A);
  for (auto _ : state) benchmark::DoNotOptimize(strong_gb(gens, ring));
}
BENCHMARK(BM_Cyclic3)->Unit(benchmark::kMicrosecond);

void BM_IntegerCoefficients(benchmark::State& state) {
  const auto A = make_alphabet({"x", "y", "z"});
  auto P = [&](const char* s) { return LaurentPolynomial::parse(A, s); };
  const std::vector<LaurentPolynomial> gens{P("6*x^2 - 4*y*z"), P("9*x*y - 3*z^2 + 2"),
                                            P("10*y^2 - 15*x*z")};
  const auto ring = make_ring(A);
  for (auto _ : state) benchmark::DoNotOptimize(strong_gb(gens, ring));
}
BENCHMARK(BM_IntegerCoefficients)->Unit(benchmark::kMillisecond);

void BM_OpenModuliBasis(benchmark::State& state) {
  const auto fx = load_fixture(default_data_dir() / "fixtures" / "m2_relations.txt");
  const auto ring = make_ring(fx.alphabet);
  for (auto _ : state) benchmark::DoNotOptimize(strong_gb(fx.polys, ring));
}
BENCHMARK(BM_OpenModuliBasis)->Unit(benchmark::kMillisecond);

void BM_OpenModuliReport(benchmark::State& state) {
  const auto fx = load_fixture(default_data_dir() / "fixtures" / "m2_relations.txt");
  const auto ring = make_ring(fx.alphabet);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_report(fx.polys, ring, {2, 3, 5, 7}));
}
BENCHMARK(BM_OpenModuliReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
