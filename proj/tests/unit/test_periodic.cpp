#include <doctest.h>

#include <cmath>
#include <random>

#include "circlefol/errors.hpp"
#include "circlefol/periodic_function.hpp"
#include "support/test_helpers.hpp"

using namespace circlefol;
using testutil::kTwoPi;

TEST_CASE("evaluation of constants and harmonics") {
  auto one = PeriodicFunction::constant(1.0, 8);
  CHECK(one(0.37) == doctest::Approx(1.0).epsilon(1e-15));

  auto cosf = PeriodicFunction::harmonic(1, 1.0, 0.0, 8);
  CHECK(cosf(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(cosf(0.25)) < 1e-14);
}

TEST_CASE("grid/spectrum round trip is the identity") {
  std::mt19937 rng(7);
  auto f = testutil::random_trig(rng, 32, 32, 1.0);
  auto g = PeriodicFunction::from_samples(f.grid_values(), 32);
  double scale = f.grid_max_abs();
  for (int k = 0; k <= 32; ++k) {
    CHECK(std::abs(f.coefficients()[k] - g.coefficients()[k]) < 1e-13 * scale);
  }
}

TEST_CASE("differentiation") {
  auto c = PeriodicFunction::constant(3.0, 8);
  CHECK(c.derivative().grid_max_abs() == 0.0);

  auto cosf = PeriodicFunction::harmonic(1, 1.0, 0.0, 8);
  auto d = cosf.derivative();
  CHECK(d(0.25) == doctest::Approx(-kTwoPi).epsilon(1e-13));

  auto sin2 = PeriodicFunction::harmonic(2, 0.0, 1.0, 8);  // sin(4 pi theta)
  CHECK(sin2.derivative()(0.0) == doctest::Approx(2.0 * kTwoPi).epsilon(1e-13));
}

TEST_CASE("differentiation is linear in spectrum space") {
  std::mt19937 rng(11);
  auto f = testutil::random_trig(rng, 16, 16, 1.0);
  auto g = testutil::random_trig(rng, 16, 16, 1.0);
  auto lhs = (f * 2.5 + g * (-1.25)).derivative();
  auto rhs = f.derivative() * 2.5 + g.derivative() * (-1.25);
  for (int k = 0; k <= 16; ++k) {
    // identical up to reassociation of the scalar arithmetic
    CHECK(std::abs(lhs.coefficients()[k] - rhs.coefficients()[k]) < 1e-15 * (1.0 + k));
  }
}

TEST_CASE("holder norms") {
  auto one = PeriodicFunction::constant(1.0, 8);
  CHECK(holder_norm(one, 0.0) == doctest::Approx(1.0));
  CHECK(holder_norm(one, 2.5) == doctest::Approx(1.0));

  auto cosf = PeriodicFunction::harmonic(1, 1.0, 0.0, 8);
  CHECK(holder_norm(cosf, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(holder_norm(cosf, 1.0) == doctest::Approx(kTwoPi).epsilon(1e-13));

  CHECK_THROWS_AS(holder_norm(cosf, -0.5), InvalidRegularity);
}

TEST_CASE("holder_norm at r=0 equals the grid max exactly") {
  std::mt19937 rng(3);
  auto f = testutil::random_trig(rng, 24, 24, 2.0);
  CHECK(holder_norm(f, 0.0) == f.grid_max_abs());
}

TEST_CASE("norm estimator is monotone in r on smooth trials") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = testutil::random_trig(rng, 32, 6, 1.0);
    double prev = 0.0;
    for (double r : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5}) {
      double v = holder_norm(f, r);
      CHECK(v >= prev - 1e-9 * (1.0 + prev));
      prev = v;
    }
  }
}

TEST_CASE("smoothing: cutoff behavior") {
  auto cosf = PeriodicFunction::harmonic(1, 1.0, 0.0, 16);
  auto kept = smooth_periodic(cosf, 8.0);
  for (int k = 0; k <= 16; ++k) {
    CHECK(std::abs(kept.coefficients()[k] - cosf.coefficients()[k]) == 0.0);
  }
  auto killed = smooth_periodic(cosf, 0.5);
  CHECK(killed.grid_max_abs() == 0.0);
}

TEST_CASE("smoothing is a projection in spectrum space") {
  std::mt19937 rng(13);
  auto f = testutil::random_trig(rng, 32, 32, 1.0);
  auto once = smooth_periodic(f, 11.0);
  auto twice = smooth_periodic(once, 11.0);
  for (int k = 0; k <= 32; ++k) {
    CHECK(std::abs(once.coefficients()[k] - twice.coefficients()[k]) == 0.0);
  }
}

TEST_CASE("smoothing residual bound on an algebraic spectrum") {
  // c_k = (1 + |k|)^{-3}: ||(S_t - I) f||_{C0 est} <= C t^{-2} ||f||_{C2 est}
  // with C <= 4 across t in {4, 8, 16, 32}.
  const int n = 64;
  std::vector<std::complex<double>> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = std::pow(1.0 + k, -3.0);
  auto f = PeriodicFunction::from_coefficients(std::move(c));
  const double c2 = holder_norm(f, 2.0);
  double fitted = 0.0;
  for (double t : {4.0, 8.0, 16.0, 32.0}) {
    double lhs = holder_norm(f - smooth_periodic(f, t), 0.0);
    fitted = std::max(fitted, lhs * t * t / c2);
  }
  INFO("fitted smoothing constant: ", fitted);
  CHECK(fitted <= 4.0);
}

TEST_CASE("smoothing inequalities with fitted constants") {
  std::mt19937 rng(17);
  const int n = 64;
  std::vector<std::complex<double>> c(n + 1);
  std::uniform_real_distribution<double> unif(0.5, 1.0);
  for (int k = 1; k <= n; ++k) c[k] = unif(rng) * std::pow(1.0 + k, -2.5);
  auto f = PeriodicFunction::from_coefficients(std::move(c));

  double worst_gain = 0.0, worst_resid = 0.0;
  for (auto [lam, mu] : std::vector<std::pair<double, double>>{{0.0, 2.0}, {1.0, 3.0}, {0.0, 1.0}}) {
    for (double t : {4.0, 8.0, 16.0}) {
      double gain = holder_norm(smooth_periodic(f, t), mu) /
                    (std::pow(t, mu - lam) * holder_norm(f, lam));
      double resid = holder_norm(f - smooth_periodic(f, t), lam) * std::pow(t, mu - lam) /
                     holder_norm(f, mu);
      worst_gain = std::max(worst_gain, gain);
      worst_resid = std::max(worst_resid, resid);
    }
  }
  INFO("fitted constants: gain ", worst_gain, " residual ", worst_resid);
  CHECK(worst_gain < 64.0);
  CHECK(worst_resid < 64.0);
}

TEST_CASE("rigid shift is exact in spectrum space") {
  auto cosf = PeriodicFunction::harmonic(1, 1.0, 0.0, 8);
  auto shifted = cosf.shifted(0.25);  // cos(2 pi (theta + 1/4)) = -sin
  CHECK(std::abs(shifted(0.0)) < 1e-14);
  CHECK(shifted(0.25) == doctest::Approx(-1.0).epsilon(1e-14));
}
