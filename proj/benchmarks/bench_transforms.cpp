#include <benchmark/benchmark.h>

#include <random>

#include "circlefol/circle_map.hpp"
#include "circlefol/periodic_function.hpp"

using namespace circlefol;

namespace {

PeriodicFunction random_pf(int n_modes, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::complex<double>> c(n_modes + 1);
  for (int k = 1; k <= n_modes; ++k) {
    c[k] = std::complex<double>(unif(rng), unif(rng)) * std::pow(0.8, k);
  }
  return PeriodicFunction::from_coefficients(std::move(c));
}

void BM_SpectrumFit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = random_pf(n, 1);
  auto samples = f.sample(2 * f.grid_size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(PeriodicFunction::from_samples(samples, n));
  }
}
BENCHMARK(BM_SpectrumFit)->Arg(64)->Arg(128)->Arg(256);

void BM_PointwiseProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = random_pf(n, 2);
  auto g = random_pf(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_PointwiseProduct)->Arg(64)->Arg(256);

void BM_ComposeWithCircleMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = random_pf(n, 4);
  auto a = CircleMap(PeriodicFunction::harmonic(1, 0.0, 0.05, n) + 0.377);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_with_circle_map(f, a));
  }
}
BENCHMARK(BM_ComposeWithCircleMap)->Arg(64)->Arg(256);

void BM_InvertCircleMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = CircleMap(PeriodicFunction::harmonic(1, 0.0, 0.05, n) + 0.377);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_circle_map(a));
  }
}
BENCHMARK(BM_InvertCircleMap)->Arg(64)->Arg(256);

void BM_HolderNorm(benchmark::State& state) {
  auto f = random_pf(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(holder_norm(f, 2.5));
  }
}
BENCHMARK(BM_HolderNorm)->Arg(64)->Arg(256);

}  // namespace
