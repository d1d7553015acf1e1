#include <doctest.h>

#include <cmath>

#include "circlefol/aposteriori.hpp"
#include "support/test_helpers.hpp"

using namespace circlefol;
using testutil::kTwoPi;

namespace {

ConjugacyTriple make_triple(const CircleMap& a, const PeriodicFunction& lambda, int order,
                            double delta = 0.3) {
  const int n = a.n_modes();
  FourierTaylor wx(order, n, 1);
  FourierTaylor wy(order, n, 0);
  wy.coefficient(1) = PeriodicFunction::constant(1.0, n);
  return ConjugacyTriple{FTPair{std::move(wx), std::move(wy)}, a, lambda, delta};
}

}  // namespace

TEST_CASE("report on the exact linear solution") {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  auto u = make_triple(CircleMap::rotation(0.3, 64), PeriodicFunction::constant(0.5, 64), 8);
  auto rep = condition_report(*f, u);
  CHECK(rep.lambda_c0 == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(rep.da_c0 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::isinf(rep.m_max));
  CHECK(rep.residual_x0 < 1e-12);
  CHECK(rep.frame_det_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.contraction_ok);
  CHECK(rep.regularity_ok);
  CHECK(rep.frame_ok);
  CHECK(rep.residual_small);
  CHECK(verify_aposteriori(rep, {}).pass);
}

TEST_CASE("regularity window from measured norms") {
  // D ell = 1 + 0.1 cos(2 pi theta): ||Da|| = 1.1, ||(Da)^{-1}|| = 1/0.9.
  const int n = 64;
  auto a = CircleMap(PeriodicFunction::harmonic(1, 0.0, 0.1 / kTwoPi, n));
  auto u = make_triple(a, PeriodicFunction::constant(0.5, n), 6);
  auto f = ModelRegistry::instance().create("linear");
  auto rep = condition_report(*f, u);

  double expect = std::min({-std::log(rep.lambda_c0 * rep.da_inv_c0) / std::log(rep.da_c0),
                            -std::log(rep.lambda_c0) / std::log(rep.dainv_c0),
                            -std::log(rep.lambda_c0) / std::log(rep.da_c0)}) -
                  2.0;
  CHECK(rep.m_max == doctest::Approx(expect).epsilon(1e-12));
  // with all derivative norms near 1.1 the window sits near 4.3
  CHECK(rep.m_max > 3.3);
  CHECK(rep.m_max < 5.3);
  CHECK(rep.regularity_ok);
}

TEST_CASE("m_max decreases as the contraction weakens") {
  const int n = 64;
  auto a = CircleMap(PeriodicFunction::harmonic(1, 0.0, 0.1 / kTwoPi, n));
  auto f = ModelRegistry::instance().create("linear");
  auto rep_a = condition_report(*f, make_triple(a, PeriodicFunction::constant(0.3, n), 6));
  auto rep_b = condition_report(*f, make_triple(a, PeriodicFunction::constant(0.5, n), 6));
  auto rep_c = condition_report(*f, make_triple(a, PeriodicFunction::constant(0.8, n), 6));
  CHECK(rep_a.m_max > rep_b.m_max);
  CHECK(rep_b.m_max > rep_c.m_max);
}

TEST_CASE("dynamical average never exceeds the sup norm") {
  const int n = 64;
  std::mt19937 rng(131);
  auto f = ModelRegistry::instance().create("linear");
  for (int trial = 0; trial < 5; ++trial) {
    auto a = CircleMap(testutil::random_trig(rng, n, 3, 0.05) + 0.3);
    auto lam = testutil::random_trig(rng, n, 3, 0.2) + 0.6;
    auto rep = condition_report(*f, make_triple(a, lam, 6));
    CHECK(rep.lambda_star <= rep.lambda_c0 + 1e-9);
  }
}

TEST_CASE("verdicts explain failures") {
  const int n = 32;
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});

  // Non-contracting lambda.
  auto bad = make_triple(CircleMap::rotation(0.3, n), PeriodicFunction::constant(1.2, n), 6);
  auto rep = condition_report(*f, bad);
  CHECK_FALSE(rep.contraction_ok);
  auto verdict = verify_aposteriori(rep, {});
  CHECK_FALSE(verdict.pass);
  CHECK(verdict.explanations.size() == 4);

  // Residual above threshold.
  auto off = make_triple(CircleMap::rotation(0.3, n), PeriodicFunction::constant(0.5, n), 6);
  off.W.y.coefficient(0) += PeriodicFunction::harmonic(1, 1e-3, 0.0, n);
  auto rep2 = condition_report(*f, off);
  CHECK(rep2.residual_x0 > 1e-8);
  CHECK_FALSE(rep2.residual_small);
  CHECK_FALSE(verify_aposteriori(rep2, {}).pass);
}

TEST_CASE("a shrinking analyticity radius raises a warning") {
  // growing Taylor coefficients put the radius estimate below delta
  const int n = 16;
  auto u = make_triple(CircleMap::rotation(0.3, n), PeriodicFunction::constant(0.5, n), 8, 0.3);
  for (int j = 2; j <= 8; ++j) {
    u.W.y.coefficient(j) = PeriodicFunction::constant(std::pow(8.0, j) * 1e-3, n);
  }
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  auto rep = condition_report(*f, u);
  CHECK(rep.analyticity_radius < u.delta);
  bool warned = false;
  for (const auto& w : rep.warnings) {
    if (w.find("analyticity radius") != std::string::npos) warned = true;
  }
  CHECK(warned);
}

TEST_CASE("reports are deterministic") {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  auto u = make_triple(CircleMap::rotation(0.3, 32), PeriodicFunction::constant(0.5, 32), 6);
  auto r1 = condition_report(*f, u);
  auto r2 = condition_report(*f, u);
  CHECK(r1.lambda_star == r2.lambda_star);
  CHECK(r1.residual_x0 == r2.residual_x0);
  CHECK(r1.m_max == r2.m_max);
}
