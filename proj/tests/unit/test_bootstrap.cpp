#include <doctest.h>

#include <cmath>

#include "circlefol/bootstrap.hpp"
#include "circlefol/cohomology.hpp"
#include "circlefol/errors.hpp"
#include "support/test_helpers.hpp"

using namespace circlefol;

TEST_CASE("bootstrap recovers the exact linear structure") {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  BootstrapConfig cfg;
  cfg.n_modes = 32;
  cfg.order = 6;
  auto u = initial_guess(*f, cfg);
  CHECK(ft_norm(compute_error(*f, u), 0.0, u.delta) < 1e-10);
  CHECK(holder_norm(u.lambda - 0.5, 0.0) < 1e-11);
  CHECK(holder_norm(u.a.periodic_part() - 0.3, 0.0) < 1e-11);
}

TEST_CASE("bootstrap fits the skew invariant graph") {
  const double alpha_amp = 0.02, l = 0.5, eta_amp = 1e-3;
  auto f = ModelRegistry::instance().create(
      "skew", {{"omega", 0.0}, {"alpha_amp", alpha_amp}, {"l", l}, {"eta_amp", eta_amp}});
  BootstrapConfig cfg;
  cfg.n_modes = 64;
  cfg.order = 6;
  cfg.n_seeds = 4096;
  cfg.burn_in = 30;
  auto u = initial_guess(*f, cfg);

  // Independent graph-transform oracle evaluated pointwise: the fixed point
  // of phi -> l phi(alpha^{-1}) + eta(alpha^{-1}) unrolled backwards.
  auto alpha_lift = [&](double x) { return x + alpha_amp * std::sin(testutil::kTwoPi * x); };
  auto alpha_inv = [&](double y) {
    double x = y;
    for (int it = 0; it < 60; ++it) {
      double fx = alpha_lift(x) - y;
      double dx = 1.0 + alpha_amp * testutil::kTwoPi * std::cos(testutil::kTwoPi * x);
      x -= fx / dx;
      if (std::abs(fx) < 1e-15) break;
    }
    return x;
  };
  double worst = 0.0;
  for (int i = 0; i < 64; ++i) {
    double theta = static_cast<double>(i) / 64.0;
    double phi = 0.0, weight = 1.0, x = theta;
    for (int j = 0; j < 50; ++j) {
      x = alpha_inv(x);
      phi += weight * eta_amp * std::cos(testutil::kTwoPi * x);
      weight *= l;
    }
    worst = std::max(worst, std::abs(u.W.y.coefficient(0)(theta) - phi));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("bootstrap feeds the solver on the forced oscillator") {
  auto f = ModelRegistry::instance().create("forced_oscillator");
  BootstrapConfig cfg;
  cfg.n_modes = 64;
  cfg.order = 10;
  auto u0 = initial_guess(*f, cfg);
  SolverConfig scfg;
  scfg.tol = 1e-11;
  auto res = solve(*f, u0, scfg);
  CHECK(res.final_residual < 1e-11);
  CHECK(res.iterations <= 8);
  // residual decreases monotonically along the run
  for (size_t i = 1; i < res.history.size(); ++i) {
    CHECK(res.history[i].residual_x0 < res.history[i - 1].residual_x0);
  }
  CHECK(res.history.back().residual_x0 > res.final_residual);
}

TEST_CASE("divergent orbits are refused") {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 2.0}});
  BootstrapConfig cfg;
  cfg.n_modes = 16;
  cfg.order = 4;
  cfg.y_seed = 0.1;
  CHECK_THROWS_AS(initial_guess(*f, cfg), NoAttractorFound);
}

TEST_CASE("a singular differential stalls the bundle iteration") {
  // b = 0 collapses Df on the circle; the backward cocycle has no inverse.
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.0}});
  BootstrapConfig cfg;
  cfg.n_modes = 16;
  cfg.order = 4;
  CHECK_THROWS_AS(initial_guess(*f, cfg), BundleIterationStalled);
}

TEST_CASE("sparse angular coverage is refused") {
  // Strong phase locking concentrates the settled fan near the sink; with a
  // small fan and long burn-in the coverage gap exceeds the bound.
  auto f = ModelRegistry::instance().create(
      "skew", {{"omega", 0.0}, {"alpha_amp", 0.041365}, {"l", 0.5}, {"eta_amp", 2e-4}});
  BootstrapConfig cfg;
  cfg.n_modes = 32;
  cfg.order = 4;
  cfg.n_seeds = 512;
  cfg.burn_in = 60;
  CHECK_THROWS_AS(initial_guess(*f, cfg), NoAttractorFound);
}
