#include "circlefol/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "circlefol/errors.hpp"
#include "circlefol/fourier_transforms.hpp"

namespace circlefol {

namespace {

double wrap01(double x) {
  double w = x - std::floor(x);
  return w == 1.0 ? 0.0 : w;
}

// 4-point Lagrange interpolation on a sorted periodic cloud (x in [0,1)).
class PeriodicCloud {
 public:
  PeriodicCloud(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}

  double max_gap() const {
    double g = 0.0;
    const size_t n = xs_.size();
    for (size_t i = 0; i < n; ++i) {
      double next = (i + 1 < n) ? xs_[i + 1] : xs_[0] + 1.0;
      g = std::max(g, next - xs_[i]);
    }
    return g;
  }

  double operator()(double t) const {
    t = wrap01(t);
    const size_t n = xs_.size();
    size_t j = std::upper_bound(xs_.begin(), xs_.end(), t) - xs_.begin();
    double px[4], py[4];
    for (int q = 0; q < 4; ++q) {
      long idx = static_cast<long>(j) - 2 + q;
      double shift = 0.0;
      while (idx < 0) {
        idx += n;
        shift -= 1.0;
      }
      while (idx >= static_cast<long>(n)) {
        idx -= n;
        shift += 1.0;
      }
      px[q] = xs_[idx] + shift;
      py[q] = ys_[idx];
    }
    double acc = 0.0;
    for (int q = 0; q < 4; ++q) {
      double w = 1.0;
      for (int p = 0; p < 4; ++p) {
        if (p != q) w *= (t - px[p]) / (px[q] - px[p]);
      }
      acc += w * py[q];
    }
    return acc;
  }

 private:
  std::vector<double> xs_, ys_;
};

}  // namespace

ConjugacyTriple initial_guess(const MapModel& f, const BootstrapConfig& cfg) {
  const int n = cfg.n_modes;
  const int L = cfg.order;
  const int m = 2 * detail::canonical_grid_size(n);

  // (i) settle a fan of seeds onto the attractor.
  std::vector<double> xs(cfg.n_seeds), ys(cfg.n_seeds);
  for (int i = 0; i < cfg.n_seeds; ++i) {
    double x = static_cast<double>(i) / cfg.n_seeds;
    double y = cfg.y_seed;
    for (int it = 0; it < cfg.burn_in; ++it) {
      Vec2 img = f.eval_point(x, y);
      x = img.x;
      y = img.y;
      if (!std::isfinite(x) || !std::isfinite(y) || std::abs(y) > cfg.blowup) {
        throw NoAttractorFound("initial_guess: orbit diverged during burn-in");
      }
    }
    xs[i] = wrap01(x);
    ys[i] = y;
  }

  // (ii) sort by angle, reject sparse coverage, fit the graph K_2(theta).
  std::vector<size_t> perm(xs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });
  std::vector<double> sx, sy;
  sx.reserve(xs.size());
  sy.reserve(xs.size());
  for (size_t idx : perm) {
    if (!sx.empty() && xs[idx] - sx.back() < 1e-12) continue;  // drop near-duplicates
    sx.push_back(xs[idx]);
    sy.push_back(ys[idx]);
  }
  if (sx.size() < 8) throw NoAttractorFound("initial_guess: too few distinct angles");
  PeriodicCloud cloud(std::move(sx), std::move(sy));
  if (cloud.max_gap() > cfg.max_gap) {
    throw NoAttractorFound("initial_guess: angular coverage gap above max_gap");
  }

  std::vector<double> k2(m);
  for (int i = 0; i < m; ++i) k2[i] = cloud(static_cast<double>(i) / m);
  PeriodicFunction K2 = PeriodicFunction::from_samples(k2, n);

  // (iii) internal dynamics off the angular image.  With the graph
  // parameterization K_1 = theta, solving K_1(a(theta)) = f_1(K(theta))
  // reduces to reading off the lift values.
  std::vector<double> ap(m), k2g = K2.sample(m);
  for (int i = 0; i < m; ++i) {
    double theta = static_cast<double>(i) / m;
    Vec2 img = f.eval_point(theta, k2g[i]);
    ap[i] = img.x - theta;
  }
  CircleMap a(PeriodicFunction::from_samples(ap, n));
  if (!a.is_diffeomorphism()) {
    throw NoAttractorFound("initial_guess: fitted internal map is not a diffeomorphism");
  }

  // (iv) stable bundle by backward power iteration: v <- Df(K)^{-1} v(a(.)),
  // normalized pointwise with a consistent orientation.
  std::vector<double> a_lift(m);
  const auto a_per = a.periodic_part().sample(m);
  for (int i = 0; i < m; ++i) a_lift[i] = static_cast<double>(i) / m + a_per[i];

  std::vector<Mat2> df(m);
  for (int i = 0; i < m; ++i) {
    df[i] = f.deriv_point(static_cast<double>(i) / m, k2g[i]);
  }

  std::vector<double> v1(m, 0.0), v2(m, 1.0);
  double change = 1.0;
  int it = 0;
  for (; it < cfg.bundle_max_iters && change > cfg.bundle_tol; ++it) {
    PeriodicFunction p1 = PeriodicFunction::from_samples(v1, n);
    PeriodicFunction p2 = PeriodicFunction::from_samples(v2, n);
    std::vector<double> w1(m), w2(m);
    detail::eval_at_many(p1.coefficients(), a_lift, w1);
    detail::eval_at_many(p2.coefficients(), a_lift, w2);
    change = 0.0;
    for (int i = 0; i < m; ++i) {
      const Mat2& d = df[i];
      double det = d.a11 * d.a22 - d.a12 * d.a21;
      if (std::abs(det) < 1e-14) {
        throw BundleIterationStalled("initial_guess: Df singular on the circle");
      }
      // Df^{-1} * (w1, w2)
      double u1 = (d.a22 * w1[i] - d.a12 * w2[i]) / det;
      double u2 = (-d.a21 * w1[i] + d.a11 * w2[i]) / det;
      double norm = std::hypot(u1, u2);
      if (norm < 1e-300) {
        throw BundleIterationStalled("initial_guess: bundle iterate vanished");
      }
      u1 /= norm;
      u2 /= norm;
      if (u1 * v1[i] + u2 * v2[i] < 0.0) {
        u1 = -u1;
        u2 = -u2;
      }
      change = std::max({change, std::abs(u1 - v1[i]), std::abs(u2 - v2[i])});
      v1[i] = u1;
      v2[i] = u2;
    }
  }
  if (change > cfg.bundle_tol) {
    throw BundleIterationStalled("initial_guess: bundle iteration hit the cap at change " +
                                 std::to_string(change));
  }

  // lambda(theta) = <Df(K(theta)) v(theta), v(a(theta))> on the unit bundle.
  PeriodicFunction p1 = PeriodicFunction::from_samples(v1, n);
  PeriodicFunction p2 = PeriodicFunction::from_samples(v2, n);
  std::vector<double> w1(m), w2(m), lam(m);
  detail::eval_at_many(p1.coefficients(), a_lift, w1);
  detail::eval_at_many(p2.coefficients(), a_lift, w2);
  for (int i = 0; i < m; ++i) {
    const Mat2& d = df[i];
    double t1 = d.a11 * v1[i] + d.a12 * v2[i];
    double t2 = d.a21 * v1[i] + d.a22 * v2[i];
    lam[i] = t1 * w1[i] + t2 * w2[i];
  }
  PeriodicFunction lambda = PeriodicFunction::from_samples(lam, n);

  // (v) assemble with orders > 1 zeroed.
  FourierTaylor Wx(L, n, 1);
  FourierTaylor Wy(L, n, 0);
  if (L >= 1) {
    Wx.coefficient(1) = p1;
    Wy.coefficient(1) = p2;
  }
  Wy.coefficient(0) = K2;

  ConjugacyTriple u{FTPair{std::move(Wx), std::move(Wy)}, a, lambda, cfg.delta};
  validate_triple(u);
  return u;
}

}  // namespace circlefol
