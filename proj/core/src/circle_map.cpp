#include "circlefol/circle_map.hpp"

#include <algorithm>
#include <cmath>

#include "circlefol/errors.hpp"

namespace circlefol {

namespace {
constexpr int kNewtonCap = 50;
}

double CircleMap::min_lift_derivative() const {
  PeriodicFunction d = lift_derivative();
  const int m = 2 * d.grid_size();
  std::vector<double> g = d.sample(m);
  double v = g.empty() ? 1.0 : g[0];
  for (double x : g) v = std::min(v, x);
  return v;
}

PeriodicFunction compose_with_circle_map(const PeriodicFunction& pf, const CircleMap& a) {
  const int n = pf.n_modes();
  const int m = 2 * detail::canonical_grid_size(std::max(n, a.n_modes()));
  std::vector<double> ax(m);
  const auto& pa = a.periodic_part();
  std::vector<double> pvals = pa.sample(m);
  for (int i = 0; i < m; ++i) ax[i] = static_cast<double>(i) / m + pvals[i];
  std::vector<double> out(m);
  detail::eval_at_many(pf.coefficients(), ax, out);
  return PeriodicFunction::from_samples(out, n);
}

CircleMap compose(const CircleMap& outer, const CircleMap& inner) {
  // ell_o(ell_i(t)) = t + p_i(t) + p_o(ell_i(t))
  PeriodicFunction p = inner.periodic_part() + compose_with_circle_map(outer.periodic_part(), inner);
  return CircleMap(std::move(p));
}

CircleMap iterate_circle_map(const CircleMap& a, int k) {
  if (k < 0) throw BadInput("iterate_circle_map requires k >= 0");
  CircleMap result = CircleMap::identity(a.n_modes());
  CircleMap power = a;
  while (k > 0) {
    if (k & 1) result = compose(power, result);
    k >>= 1;
    if (k > 0) power = compose(power, power);
  }
  return result;
}

double invert_lift_at(const CircleMap& a, double y) {
  // Newton on ell(x) - y with bisection fallback; ell is increasing, so the
  // solution lies in [y - max p, y - min p].
  const auto& p = a.periodic_part();
  double lo = y - p.grid_max() - 0.25;
  double hi = y - p.grid_min() + 0.25;
  double x = y - p.mean();
  PeriodicFunction dp = p.derivative();
  for (int it = 0; it < kNewtonCap; ++it) {
    double f = a.lift(x) - y;
    if (std::abs(f) < 1e-14) return x;
    if (f > 0) hi = std::min(hi, x);
    else lo = std::max(lo, x);
    double d = 1.0 + dp(x);
    double step = (d > 1e-12) ? f / d : 0.0;
    double xn = x - step;
    if (step == 0.0 || xn <= lo || xn >= hi) xn = 0.5 * (lo + hi);
    x = xn;
  }
  if (std::abs(a.lift(x) - y) > 1e-11) {
    throw NoConvergence("invert_lift_at: pointwise Newton exceeded iteration cap");
  }
  return x;
}

CircleMap invert_circle_map(const CircleMap& a) {
  if (!a.is_diffeomorphism()) {
    throw NotADiffeomorphism("invert_circle_map: min D ell <= 0");
  }
  const int n = a.n_modes();
  const int m = 2 * detail::canonical_grid_size(n);
  const auto& p = a.periodic_part().coefficients();
  const auto dp = a.periodic_part().derivative().coefficients();
  std::vector<double> q(m);
  // The solutions advance monotonically with y, so each grid point warm
  // starts from its neighbor; a fresh bracketed solve stays as fallback.
  double x = -a.periodic_part().mean();
  for (int i = 0; i < m; ++i) {
    double y = static_cast<double>(i) / m;
    bool done = false;
    for (int it = 0; it < kNewtonCap; ++it) {
      double f = x + detail::eval_at(p, x) - y;
      if (std::abs(f) < 1e-14) {
        done = true;
        break;
      }
      double d = 1.0 + detail::eval_at(dp, x);
      if (d <= 1e-12) break;
      x -= f / d;
    }
    if (!done) x = invert_lift_at(a, y);
    q[i] = x - y;  // periodic part of the inverse lift
    x += 1.0 / m;
  }
  return CircleMap(PeriodicFunction::from_samples(q, n));
}

}  // namespace circlefol
