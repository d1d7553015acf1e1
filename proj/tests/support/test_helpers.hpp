#pragma once

// Shared helpers for the test suites: deterministic random band-limited
// functions and small independent oracles.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "circlefol/circle_map.hpp"
#include "circlefol/periodic_function.hpp"

namespace testutil {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Random trigonometric polynomial with modes <= max_mode and C0 norm roughly
// `amp` (coefficients decay geometrically).
inline circlefol::PeriodicFunction random_trig(std::mt19937& rng, int n_modes, int max_mode,
                                               double amp) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::complex<double>> c(static_cast<size_t>(n_modes) + 1, {0.0, 0.0});
  double scale = amp;
  for (int k = 1; k <= max_mode && k <= n_modes; ++k) {
    scale *= 0.5;
    c[k] = std::complex<double>(unif(rng), unif(rng)) * scale;
  }
  return circlefol::PeriodicFunction::from_coefficients(std::move(c));
}

// Naive O(k) cocycle product l(theta) l(a(theta)) ... l(a^{o(k-1)}(theta))
// evaluated pointwise (no spectral truncation between factors).
inline double naive_cocycle_at(const circlefol::PeriodicFunction& l,
                               const circlefol::CircleMap& a, long k, double theta) {
  double prod = 1.0;
  double x = theta;
  for (long j = 0; j < k; ++j) {
    prod *= l(x);
    x = a.lift(x);
  }
  return prod;
}

// Naive partial sum sum_{j<terms} l^{[j]}(theta) eta(a^{o j}(theta)) pointwise.
inline double naive_cohomology_sum_at(const circlefol::PeriodicFunction& l,
                                      const circlefol::CircleMap& a,
                                      const circlefol::PeriodicFunction& eta, long terms,
                                      double theta) {
  double acc = 0.0;
  double prod = 1.0;
  double x = theta;
  for (long j = 0; j < terms; ++j) {
    acc += prod * eta(x);
    prod *= l(x);
    x = a.lift(x);
  }
  return acc;
}

}  // namespace testutil
