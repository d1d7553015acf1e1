#include "circlefol/fourier_taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circlefol/errors.hpp"
#include "circlefol/fourier_transforms.hpp"

namespace circlefol {

namespace {

void require_compatible(const FourierTaylor& u, const FourierTaylor& v) {
  if (u.order() != v.order()) throw OrderMismatch("fourier-taylor orders differ");
}

// Samples every coefficient of u on an m-point grid; row j holds u^{(j)}.
std::vector<std::vector<double>> sample_orders(const FourierTaylor& u, int m) {
  std::vector<std::vector<double>> rows(static_cast<size_t>(u.order()) + 1);
  for (int j = 0; j <= u.order(); ++j) rows[j] = u.coefficient(j).sample(m);
  return rows;
}

FourierTaylor fit_orders(const std::vector<std::vector<double>>& rows, int n_modes, int winding) {
  std::vector<PeriodicFunction> coeffs;
  coeffs.reserve(rows.size());
  for (const auto& r : rows) coeffs.push_back(PeriodicFunction::from_samples(r, n_modes));
  return FourierTaylor(std::move(coeffs), winding);
}

}  // namespace

FourierTaylor::FourierTaylor(int order, int n_modes, int winding) : winding_(winding) {
  if (order < 0) throw BadInput("order must be >= 0");
  coeffs_.assign(static_cast<size_t>(order) + 1, PeriodicFunction::zero(n_modes));
}

FourierTaylor::FourierTaylor(std::vector<PeriodicFunction> coeffs, int winding)
    : coeffs_(std::move(coeffs)), winding_(winding) {
  if (coeffs_.empty()) throw BadInput("empty coefficient list");
  for (const auto& c : coeffs_) {
    if (c.n_modes() != coeffs_[0].n_modes()) throw OrderMismatch("coefficients must share one mode cap");
  }
}

FourierTaylor FourierTaylor::constant(double v, int order, int n_modes) {
  FourierTaylor u(order, n_modes);
  u.coeffs_[0] = PeriodicFunction::constant(v, n_modes);
  return u;
}

double FourierTaylor::operator()(double theta, double s) const {
  double acc = winding_ * theta;
  double sj = 1.0;
  for (const auto& c : coeffs_) {
    acc += c(theta) * sj;
    sj *= s;
  }
  return acc;
}

TaylorJet FourierTaylor::jet_at(double theta) const {
  TaylorJet j(order());
  for (int k = 0; k <= order(); ++k) j[k] = coeffs_[k](theta);
  j[0] += winding_ * theta;
  return j;
}

FourierTaylor& FourierTaylor::operator+=(const FourierTaylor& rhs) {
  require_compatible(*this, rhs);
  winding_ += rhs.winding_;
  for (int j = 0; j <= order(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

FourierTaylor& FourierTaylor::operator-=(const FourierTaylor& rhs) {
  require_compatible(*this, rhs);
  winding_ -= rhs.winding_;
  for (int j = 0; j <= order(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

FourierTaylor& FourierTaylor::operator*=(double s) {
  if (winding_ != 0) throw BadInput("cannot scale a winding component");
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FourierTaylor FourierTaylor::dtheta() const {
  std::vector<PeriodicFunction> d;
  d.reserve(coeffs_.size());
  for (const auto& c : coeffs_) d.push_back(c.derivative());
  if (winding_ != 0) d[0] += static_cast<double>(winding_);
  return FourierTaylor(std::move(d), 0);
}

FourierTaylor FourierTaylor::ds() const {
  const int L = order();
  std::vector<PeriodicFunction> d;
  d.reserve(coeffs_.size());
  for (int j = 1; j <= L; ++j) d.push_back(coeffs_[j] * static_cast<double>(j));
  d.push_back(PeriodicFunction::zero(n_modes()));
  return FourierTaylor(std::move(d), 0);
}

FourierTaylor FourierTaylor::times_s() const {
  if (winding_ != 0) throw BadInput("cannot shift a winding component");
  const int L = order();
  std::vector<PeriodicFunction> d;
  d.reserve(coeffs_.size());
  d.push_back(PeriodicFunction::zero(n_modes()));
  for (int j = 0; j < L; ++j) d.push_back(coeffs_[j]);
  return FourierTaylor(std::move(d), 0);
}

FourierTaylor FourierTaylor::truncated(int order) const {
  std::vector<PeriodicFunction> d;
  d.reserve(static_cast<size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    d.push_back(j <= this->order() ? coeffs_[j] : PeriodicFunction::zero(n_modes()));
  }
  return FourierTaylor(std::move(d), winding_);
}

FourierTaylor ft_mul(const FourierTaylor& u, const FourierTaylor& v) {
  if (u.winding() != 0 || v.winding() != 0) throw BadInput("ft_mul requires winding 0");
  require_compatible(u, v);
  const int L = u.order();
  const int n = std::max(u.n_modes(), v.n_modes());
  const int m = 2 * detail::canonical_grid_size(n);
  auto gu = sample_orders(u, m);
  auto gv = sample_orders(v, m);
  std::vector<std::vector<double>> rows(static_cast<size_t>(L) + 1,
                                        std::vector<double>(m, 0.0));
  for (int i = 0; i <= L; ++i) {
    for (int j = 0; j + i <= L; ++j) {
      auto& dst = rows[i + j];
      const auto& a = gu[i];
      const auto& b = gv[j];
      for (int p = 0; p < m; ++p) dst[p] += a[p] * b[p];
    }
  }
  return fit_orders(rows, n, 0);
}

FourierTaylor ft_mul(const PeriodicFunction& p, const FourierTaylor& u) {
  if (u.winding() != 0) throw BadInput("ft_mul requires winding 0");
  std::vector<PeriodicFunction> d;
  d.reserve(static_cast<size_t>(u.order()) + 1);
  for (int j = 0; j <= u.order(); ++j) d.push_back(p * u.coefficient(j));
  return FourierTaylor(std::move(d), 0);
}

InnerCompositionPlan InnerCompositionPlan::build(const CircleMap& a,
                                                 const PeriodicFunction& lambda,
                                                 int max_order, int m) {
  InnerCompositionPlan plan;
  plan.m = m;
  plan.max_order = max_order;
  plan.a_periodic = a.periodic_part().sample(m);
  plan.a_lift.resize(m);
  for (int i = 0; i < m; ++i) {
    plan.a_lift[i] = static_cast<double>(i) / m + plan.a_periodic[i];
  }
  std::vector<double> lam = lambda.sample(m);
  plan.lambda_pow.assign(static_cast<size_t>(max_order + 1) * m, 0.0);
  for (int i = 0; i < m; ++i) plan.lambda_pow[i] = 1.0;
  for (int j = 1; j <= max_order; ++j) {
    double* dst = plan.lambda_pow.data() + static_cast<size_t>(j) * m;
    const double* prev = plan.lambda_pow.data() + static_cast<size_t>(j - 1) * m;
    for (int i = 0; i < m; ++i) dst[i] = prev[i] * lam[i];
  }
  return plan;
}

FourierTaylor ft_compose_inner(const FourierTaylor& u, const InnerCompositionPlan& plan) {
  const int L = u.order();
  if (L > plan.max_order) throw OrderMismatch("composition plan order too small");
  const int m = plan.m;
  const int n = u.n_modes();
  std::vector<std::vector<double>> rows(static_cast<size_t>(L) + 1, std::vector<double>(m));
  for (int j = 0; j <= L; ++j) {
    detail::eval_at_many(u.coefficient(j).coefficients(), plan.a_lift, rows[j]);
    const double* lp = plan.lambda_pow.data() + static_cast<size_t>(j) * m;
    auto& r = rows[j];
    for (int i = 0; i < m; ++i) r[i] *= lp[i];
  }
  if (u.winding() != 0) {
    // w * ell_a(theta) = w * theta + w * p_a(theta): the periodic part joins
    // order 0, the w*theta term stays encoded in the winding flag.
    auto& r0 = rows[0];
    for (int i = 0; i < m; ++i) r0[i] += u.winding() * plan.a_periodic[i];
  }
  return fit_orders(rows, n, u.winding());
}

FourierTaylor ft_compose_inner(const FourierTaylor& u, const CircleMap& a,
                               const PeriodicFunction& lambda) {
  const int n = std::max({u.n_modes(), a.n_modes(), lambda.n_modes()});
  const int m = 2 * detail::canonical_grid_size(n);
  return ft_compose_inner(u, InnerCompositionPlan::build(a, lambda, u.order(), m));
}

double ft_norm(const FourierTaylor& u, double r, double delta) {
  if (delta <= 0.0) throw BadInput("ft_norm requires delta > 0");
  double acc = 0.0;
  double dj = 1.0;
  for (int j = 0; j <= u.order(); ++j) {
    acc += holder_norm(u.coefficient(j), r) * dj;
    dj *= delta;
  }
  return acc;
}

double ft_norm(const FTPair& u, double r, double delta) {
  return ft_norm(u.x, r, delta) + ft_norm(u.y, r, delta);
}

FourierTaylor ft_smooth(const FourierTaylor& u, double t) {
  std::vector<PeriodicFunction> d;
  d.reserve(static_cast<size_t>(u.order()) + 1);
  for (int j = 0; j <= u.order(); ++j) d.push_back(smooth_periodic(u.coefficient(j), t));
  return FourierTaylor(std::move(d), u.winding());
}

FTMatrix jet_matrix_inverse(const FTMatrix& mat, double det_floor) {
  for (const auto* e : {&mat.a11, &mat.a12, &mat.a21, &mat.a22}) {
    if (e->winding() != 0) throw BadInput("matrix entries must have winding 0");
  }
  const int L = mat.a11.order();
  const int n = std::max({mat.a11.n_modes(), mat.a12.n_modes(), mat.a21.n_modes(), mat.a22.n_modes()});
  const int m = 2 * detail::canonical_grid_size(n);
  auto g11 = sample_orders(mat.a11, m);
  auto g12 = sample_orders(mat.a12, m);
  auto g21 = sample_orders(mat.a21, m);
  auto g22 = sample_orders(mat.a22, m);

  std::vector<std::vector<double>> r11(L + 1, std::vector<double>(m)), r12 = r11, r21 = r11, r22 = r11;

  bool singular = false;
  detail::parallel_for(m, [&](int begin, int end) {
    TaylorJet a(L), b(L), c(L), d(L);
    for (int i = begin; i < end; ++i) {
      for (int k = 0; k <= L; ++k) {
        a[k] = g11[k][i];
        b[k] = g12[k][i];
        c[k] = g21[k][i];
        d[k] = g22[k][i];
      }
      TaylorJet det = a * d - b * c;
      if (std::abs(det[0]) < det_floor) {
        singular = true;
        return;
      }
      TaylorJet inv_det = jet_reciprocal(det, det_floor);
      TaylorJet o11 = d * inv_det;
      TaylorJet o12 = -b * inv_det;
      TaylorJet o21 = -c * inv_det;
      TaylorJet o22 = a * inv_det;
      for (int k = 0; k <= L; ++k) {
        r11[k][i] = o11[k];
        r12[k][i] = o12[k];
        r21[k][i] = o21[k];
        r22[k][i] = o22[k];
      }
    }
  });
  if (singular) {
    throw SingularFrame("jet_matrix_inverse: |det| at s=0 below threshold on the grid");
  }
  return FTMatrix{fit_orders(r11, n, 0), fit_orders(r12, n, 0), fit_orders(r21, n, 0),
                  fit_orders(r22, n, 0)};
}

FTPair ft_matvec(const FTMatrix& m, const FTPair& v) {
  return FTPair{ft_mul(m.a11, v.x) + ft_mul(m.a12, v.y),
                ft_mul(m.a21, v.x) + ft_mul(m.a22, v.y)};
}

double taylor_tail_ratio(const FourierTaylor& u, double delta) {
  double total = 0.0;
  double dj = 1.0;
  double top = 0.0;
  for (int j = 0; j <= u.order(); ++j) {
    double term = u.coefficient(j).grid_max_abs() * dj;
    total += term;
    if (j == u.order()) top = term;
    dj *= delta;
  }
  return total > 0.0 ? top / total : 0.0;
}

double analyticity_radius_estimate(const FourierTaylor& u) {
  const int L = u.order();
  if (L < 4) throw BadInput("analyticity_radius_estimate requires order >= 4");
  const int j0 = (L + 1) / 2;
  // Least-squares fit of log ||u^{(j)}|| against j over the top half.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int j = j0; j <= L; ++j) {
    double nj = u.coefficient(j).grid_max_abs();
    if (nj <= 1e-280) return std::numeric_limits<double>::infinity();
    double x = j, y = std::log(nj);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  double denom = cnt * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  double slope = (cnt * sxy - sx * sy) / denom;
  // Decaying coefficients give slope < 0 and radius > 1; growing ones give
  // slope > 0 and a radius below 1, the case the delta warning watches for.
  return std::exp(-slope);
}

}  // namespace circlefol
