#include <doctest.h>

#include <cmath>
#include <random>

#include "circlefol/errors.hpp"
#include "circlefol/map_model.hpp"
#include "support/test_helpers.hpp"

using namespace circlefol;
using testutil::kTwoPi;

namespace {

FTPair trivial_embedding(int order, int n_modes) {
  FourierTaylor wx(order, n_modes, 1);
  FourierTaylor wy(order, n_modes, 0);
  if (order >= 1) wy.coefficient(1) = PeriodicFunction::constant(1.0, n_modes);
  return FTPair{std::move(wx), std::move(wy)};
}

}  // namespace

TEST_CASE("registry: creation, defaults, unknown names") {
  auto& reg = ModelRegistry::instance();
  auto names = reg.names();
  CHECK(std::find(names.begin(), names.end(), "linear") != names.end());
  CHECK(std::find(names.begin(), names.end(), "skew") != names.end());
  CHECK(std::find(names.begin(), names.end(), "forced_oscillator") != names.end());

  auto lin = reg.create("linear", {{"omega", 0.25}});
  CHECK(lin->parameters().at("omega") == doctest::Approx(0.25));
  CHECK(lin->parameters().at("b") == doctest::Approx(0.5));

  CHECK_THROWS_AS(reg.create("nope"), BadInput);
  CHECK_THROWS_AS(reg.create("linear", {{"zeta", 1.0}}), BadInput);
}

TEST_CASE("angular equivariance under theta -> theta + 1") {
  auto& reg = ModelRegistry::instance();
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (const auto& name : {"linear", "skew", "forced_oscillator"}) {
    auto f = reg.create(name);
    for (int i = 0; i < 10; ++i) {
      double x = unif(rng), y = 0.3 * unif(rng);
      Vec2 a = f->eval_point(x, y);
      Vec2 b = f->eval_point(x + 1.0, y);
      CHECK(b.x - a.x == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(b.y == doctest::Approx(a.y).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivatives agree with finite differences") {
  auto& reg = ModelRegistry::instance();
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  const double h = 1e-7;
  for (const auto& name : {"linear", "skew", "forced_oscillator"}) {
    auto f = reg.create(name);
    for (int i = 0; i < 50; ++i) {
      double x = unif(rng) + 0.5, y = 0.4 * unif(rng);
      Mat2 d = f->deriv_point(x, y);
      Vec2 fx1 = f->eval_point(x + h, y), fx0 = f->eval_point(x - h, y);
      Vec2 fy1 = f->eval_point(x, y + h), fy0 = f->eval_point(x, y - h);
      CHECK(std::abs((fx1.x - fx0.x) / (2 * h) - d.a11) < 1e-6);
      CHECK(std::abs((fy1.x - fy0.x) / (2 * h) - d.a12) < 1e-6);
      CHECK(std::abs((fx1.y - fx0.y) / (2 * h) - d.a21) < 1e-6);
      CHECK(std::abs((fy1.y - fy0.y) / (2 * h) - d.a22) < 1e-6);
    }
  }
}

TEST_CASE("apply_map_jet on the linear model is exact") {
  auto f = ModelRegistry::instance().create("linear", {{"omega", 0.3}, {"b", 0.5}});
  auto w = trivial_embedding(8, 16);
  auto fw = apply_map_jet(*f, w);
  CHECK(fw.x.winding() == 1);
  CHECK(holder_norm(fw.x.coefficient(0) - 0.3, 0.0) < 1e-13);
  CHECK(holder_norm(fw.y.coefficient(1) - 0.5, 0.0) < 1e-13);
  for (int j = 2; j <= 8; ++j) CHECK(holder_norm(fw.y.coefficient(j), 0.0) < 1e-13);

  auto dfw = apply_dmap_jet(*f, w);
  CHECK(holder_norm(dfw.a11.coefficient(0) - 1.0, 0.0) < 1e-14);
  CHECK(holder_norm(dfw.a22.coefficient(0) - 0.5, 0.0) < 1e-14);
  CHECK(ft_norm(dfw.a12, 0.0, 0.3) < 1e-14);
}

TEST_CASE("order-0 transport reproduces the plain circle image") {
  auto f = ModelRegistry::instance().create("forced_oscillator");
  const int n = 32;
  FourierTaylor wx(0, n, 1);
  FourierTaylor wy(0, n, 0);
  wy.coefficient(0) = PeriodicFunction::harmonic(1, 0.05, 0.02, n);
  FTPair w{wx, wy};
  auto fw = apply_map_jet(*f, w);
  for (double t : {0.1, 0.37, 0.77}) {
    Vec2 img = f->eval_point(t, wy.coefficient(0)(t));
    CHECK(fw.x(t, 0.0) == doctest::Approx(img.x).epsilon(1e-11));
    CHECK(fw.y(t, 0.0) == doctest::Approx(img.y).epsilon(1e-11));
  }
}

TEST_CASE("skew model derivative structure at jet order 0") {
  auto f = ModelRegistry::instance().create(
      "skew", {{"omega", 0.1}, {"alpha_amp", 0.03}, {"l", 0.5}, {"eta_amp", 0.2}});
  for (double x : {0.0, 0.33, 0.8}) {
    Mat2 d = f->deriv_point(x, 0.12);
    CHECK(d.a11 == doctest::Approx(1.0 + 0.03 * kTwoPi * std::cos(kTwoPi * x)).epsilon(1e-12));
    CHECK(d.a12 == doctest::Approx(0.0));
    CHECK(d.a21 == doctest::Approx(-0.2 * kTwoPi * std::sin(kTwoPi * x)).epsilon(1e-12));
    CHECK(d.a22 == doctest::Approx(0.5));
  }
}

TEST_CASE("jet transport against pointwise evaluation of the map") {
  auto f = ModelRegistry::instance().create("forced_oscillator");
  std::mt19937 rng(71);
  const int L = 8, n = 64;
  FourierTaylor wx(L, n, 1);
  wx.coefficient(0) = testutil::random_trig(rng, n, 4, 0.02);
  wx.coefficient(1) = testutil::random_trig(rng, n, 4, 0.05);
  FourierTaylor wy(L, n, 0);
  wy.coefficient(0) = testutil::random_trig(rng, n, 4, 0.1);
  wy.coefficient(1) = testutil::random_trig(rng, n, 4, 0.5) + 1.0;
  wy.coefficient(2) = testutil::random_trig(rng, n, 4, 0.1);
  FTPair w{wx, wy};
  auto fw = apply_map_jet(*f, w);

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    double theta = unif(rng), s = 0.2 * (2.0 * unif(rng) - 1.0);
    Vec2 img = f->eval_point(w.x(theta, s), w.y(theta, s));
    // fw is the order-L truncation of an entire function of s; compare
    // against the truncated series evaluated at small s.
    worst = std::max(worst, std::abs(fw.x(theta, s) - img.x));
    worst = std::max(worst, std::abs(fw.y(theta, s) - img.y));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("chain rule: D(f o W) two ways") {
  auto f = ModelRegistry::instance().create("forced_oscillator");
  std::mt19937 rng(73);
  const int L = 8, n = 64;
  FourierTaylor wx(L, n, 1);
  wx.coefficient(1) = testutil::random_trig(rng, n, 3, 0.05);
  FourierTaylor wy(L, n, 0);
  wy.coefficient(0) = testutil::random_trig(rng, n, 3, 0.1);
  wy.coefficient(1) = testutil::random_trig(rng, n, 3, 0.3) + 1.0;
  FTPair w{wx, wy};

  auto fw = apply_map_jet(*f, w);
  auto df = apply_dmap_jet(*f, w);
  FTMatrix dw{w.x.dtheta(), w.x.ds(), w.y.dtheta(), w.y.ds()};
  // product Df(W) * DW
  FTMatrix lhs{ft_mul(df.a11, dw.a11) + ft_mul(df.a12, dw.a21),
               ft_mul(df.a11, dw.a12) + ft_mul(df.a12, dw.a22),
               ft_mul(df.a21, dw.a11) + ft_mul(df.a22, dw.a21),
               ft_mul(df.a21, dw.a12) + ft_mul(df.a22, dw.a22)};
  FTMatrix rhs{fw.x.dtheta(), fw.x.ds(), fw.y.dtheta(), fw.y.ds()};
  // d/ds of the order-L truncation loses the top order; compare through L-1.
  auto diff_at = [&](const FourierTaylor& a, const FourierTaylor& b) {
    return ft_norm((a - b).truncated(L - 1), 0.0, 0.2);
  };
  double diff = diff_at(lhs.a11, rhs.a11) + diff_at(lhs.a12, rhs.a12) +
                diff_at(lhs.a21, rhs.a21) + diff_at(lhs.a22, rhs.a22);
  CHECK(diff < 1e-9);
}
