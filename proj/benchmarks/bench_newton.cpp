#include <benchmark/benchmark.h>

#include "circlefol/newton.hpp"

using namespace circlefol;

namespace {

ConjugacyTriple perturbed_linear(int order, int n_modes) {
  FourierTaylor wx(order, n_modes, 1);
  FourierTaylor wy(order, n_modes, 0);
  wy.coefficient(1) = PeriodicFunction::constant(1.0, n_modes);
  wy.coefficient(0) = PeriodicFunction::harmonic(1, 1e-3, 0.0, n_modes);
  return ConjugacyTriple{FTPair{std::move(wx), std::move(wy)},
                         CircleMap::rotation(0.3, n_modes),
                         PeriodicFunction::constant(0.5, n_modes), 0.3};
}

void BM_ComputeError(benchmark::State& state) {
  auto f = ModelRegistry::instance().create("forced_oscillator");
  auto u = perturbed_linear(static_cast<int>(state.range(1)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_error(*f, u));
  }
}
BENCHMARK(BM_ComputeError)->Args({64, 10})->Args({256, 10});

void BM_NewtonStep(benchmark::State& state) {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  auto u = perturbed_linear(static_cast<int>(state.range(1)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_step(*f, u, {}));
  }
}
BENCHMARK(BM_NewtonStep)->Args({64, 8})->Args({128, 10})->Args({256, 10})->Unit(benchmark::kMillisecond);

}  // namespace
