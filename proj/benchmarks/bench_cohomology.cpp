#include <benchmark/benchmark.h>

#include "circlefol/cohomology.hpp"

using namespace circlefol;

namespace {

void BM_CohomologySolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double lbar = static_cast<double>(state.range(1)) / 100.0;
  auto a = CircleMap(PeriodicFunction::harmonic(1, 0.0, 0.03, n) + 0.3777);
  auto l = PeriodicFunction::harmonic(1, 0.1, 0.0, n) + lbar;
  auto eta = PeriodicFunction::harmonic(1, 1.0, 0.5, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_cohomological(l, a, eta, 1e-12));
  }
}
BENCHMARK(BM_CohomologySolve)->Args({64, 50})->Args({256, 50})->Args({64, 85})->Args({256, 85});

void BM_CocycleProduct(benchmark::State& state) {
  const int n = 128;
  auto a = CircleMap(PeriodicFunction::harmonic(1, 0.0, 0.03, n) + 0.3777);
  auto l = PeriodicFunction::harmonic(1, 0.1, 0.0, n) + 0.6;
  const long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cocycle_product(l, a, k));
  }
}
BENCHMARK(BM_CocycleProduct)->Arg(8)->Arg(64)->Arg(512);

}  // namespace
