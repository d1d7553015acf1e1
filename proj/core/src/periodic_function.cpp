#include "circlefol/periodic_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circlefol/errors.hpp"

namespace circlefol {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PeriodicFunction::PeriodicFunction(int n_modes) {
  if (n_modes < 0) throw BadInput("n_modes must be >= 0");
  n_modes_ = n_modes;
  coeffs_.assign(static_cast<size_t>(n_modes) + 1, cplx(0.0, 0.0));
  grid_.assign(detail::canonical_grid_size(n_modes), 0.0);
}

PeriodicFunction PeriodicFunction::constant(double value, int n_modes) {
  PeriodicFunction f(n_modes);
  f.coeffs_[0] = cplx(value, 0.0);
  std::fill(f.grid_.begin(), f.grid_.end(), value);
  return f;
}

PeriodicFunction PeriodicFunction::harmonic(int k, double amp_cos, double amp_sin, int n_modes) {
  if (k < 0 || k > n_modes) throw BadInput("harmonic index out of range");
  PeriodicFunction f(n_modes);
  if (k == 0) {
    f.coeffs_[0] = cplx(amp_cos, 0.0);
  } else {
    // cos(2 pi k t) = e^{ikt}/2 + c.c.,  sin(2 pi k t) = e^{ikt}/(2i) + c.c.
    f.coeffs_[k] = cplx(0.5 * amp_cos, -0.5 * amp_sin);
  }
  f.refresh_grid();
  return f;
}

PeriodicFunction PeriodicFunction::from_coefficients(std::vector<cplx> coeffs) {
  if (coeffs.empty()) coeffs.assign(1, cplx(0.0, 0.0));
  coeffs[0] = cplx(coeffs[0].real(), 0.0);
  PeriodicFunction f(static_cast<int>(coeffs.size()) - 1);
  f.coeffs_ = std::move(coeffs);
  f.refresh_grid();
  return f;
}

PeriodicFunction PeriodicFunction::from_samples(std::span<const double> samples, int n_modes) {
  if (samples.empty()) throw BadInput("no samples");
  PeriodicFunction f(n_modes);
  f.coeffs_ = detail::fit_spectrum(samples, n_modes);
  if (static_cast<int>(samples.size()) == f.grid_size()) {
    std::copy(samples.begin(), samples.end(), f.grid_.begin());
  } else {
    f.refresh_grid();
  }
  return f;
}

PeriodicFunction PeriodicFunction::from_function(const std::function<double(double)>& fn,
                                                 int n_modes) {
  const int m = 2 * detail::canonical_grid_size(n_modes);
  std::vector<double> samples(m);
  for (int i = 0; i < m; ++i) samples[i] = fn(static_cast<double>(i) / m);
  return from_samples(samples, n_modes);
}

PeriodicFunction::cplx PeriodicFunction::coefficient(int k) const {
  int ak = std::abs(k);
  if (ak > n_modes_) return {0.0, 0.0};
  return k >= 0 ? coeffs_[ak] : std::conj(coeffs_[ak]);
}

void PeriodicFunction::refresh_grid() {
  grid_ = detail::eval_grid(coeffs_, detail::canonical_grid_size(n_modes_));
}

std::vector<double> PeriodicFunction::sample(int m) const {
  return detail::eval_grid(coeffs_, m);
}

double PeriodicFunction::grid_max_abs() const {
  double v = 0.0;
  for (double x : grid_) v = std::max(v, std::abs(x));
  return v;
}

double PeriodicFunction::grid_min() const {
  double v = grid_.empty() ? 0.0 : grid_[0];
  for (double x : grid_) v = std::min(v, x);
  return v;
}

double PeriodicFunction::grid_max() const {
  double v = grid_.empty() ? 0.0 : grid_[0];
  for (double x : grid_) v = std::max(v, x);
  return v;
}

PeriodicFunction PeriodicFunction::derivative() const {
  std::vector<cplx> d(coeffs_.size());
  for (int k = 0; k <= n_modes_; ++k) d[k] = cplx(0.0, kTwoPi * k) * coeffs_[k];
  return from_coefficients(std::move(d));
}

PeriodicFunction PeriodicFunction::shifted(double c) const {
  std::vector<cplx> s(coeffs_.size());
  for (int k = 0; k <= n_modes_; ++k) {
    double ph = kTwoPi * k * c;
    s[k] = coeffs_[k] * cplx(std::cos(ph), std::sin(ph));
  }
  return from_coefficients(std::move(s));
}

PeriodicFunction PeriodicFunction::with_modes(int n_modes) const {
  if (n_modes == n_modes_) return *this;
  std::vector<cplx> c(static_cast<size_t>(n_modes) + 1, cplx(0.0, 0.0));
  for (int k = 0; k <= std::min(n_modes, n_modes_); ++k) c[k] = coeffs_[k];
  return from_coefficients(std::move(c));
}

PeriodicFunction& PeriodicFunction::operator+=(const PeriodicFunction& rhs) {
  if (rhs.n_modes_ > n_modes_) {
    *this = with_modes(rhs.n_modes_);
  }
  for (int k = 0; k <= rhs.n_modes_; ++k) coeffs_[k] += rhs.coeffs_[k];
  if (grid_size() == rhs.grid_size()) {
    for (size_t i = 0; i < grid_.size(); ++i) grid_[i] += rhs.grid_[i];
  } else {
    refresh_grid();
  }
  return *this;
}

PeriodicFunction& PeriodicFunction::operator-=(const PeriodicFunction& rhs) {
  if (rhs.n_modes_ > n_modes_) {
    *this = with_modes(rhs.n_modes_);
  }
  for (int k = 0; k <= rhs.n_modes_; ++k) coeffs_[k] -= rhs.coeffs_[k];
  if (grid_size() == rhs.grid_size()) {
    for (size_t i = 0; i < grid_.size(); ++i) grid_[i] -= rhs.grid_[i];
  } else {
    refresh_grid();
  }
  return *this;
}

PeriodicFunction& PeriodicFunction::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  for (auto& g : grid_) g *= s;
  return *this;
}

PeriodicFunction& PeriodicFunction::operator+=(double c) {
  coeffs_[0] += c;
  for (auto& g : grid_) g += c;
  return *this;
}

PeriodicFunction operator-(PeriodicFunction a) { return a *= -1.0; }

PeriodicFunction operator*(const PeriodicFunction& a, const PeriodicFunction& b) {
  const int n = std::max(a.n_modes(), b.n_modes());
  const int m = 2 * detail::canonical_grid_size(n);
  std::vector<double> ga = a.sample(m);
  std::vector<double> gb = b.sample(m);
  for (int i = 0; i < m; ++i) ga[i] *= gb[i];
  return PeriodicFunction::from_samples(ga, n);
}

PeriodicFunction transform_pointwise(const PeriodicFunction& f,
                                     const std::function<double(double)>& fn) {
  const int m = 2 * f.grid_size();
  std::vector<double> g = f.sample(m);
  for (auto& x : g) x = fn(x);
  return PeriodicFunction::from_samples(g, f.n_modes());
}

PeriodicFunction pointwise_quotient(const PeriodicFunction& a, const PeriodicFunction& b,
                                    double floor) {
  const int n = std::max(a.n_modes(), b.n_modes());
  const int m = 2 * detail::canonical_grid_size(n);
  std::vector<double> ga = a.sample(m);
  std::vector<double> gb = b.sample(m);
  for (int i = 0; i < m; ++i) {
    if (std::abs(gb[i]) < floor) throw BadInput("pointwise_quotient: denominator below floor");
    ga[i] /= gb[i];
  }
  return PeriodicFunction::from_samples(ga, n);
}

PeriodicFunction pointwise_power(const PeriodicFunction& f, int p) {
  if (p < 0) throw BadInput("pointwise_power: negative exponent");
  if (p == 0) return PeriodicFunction::constant(1.0, f.n_modes());
  const int m = 2 * f.grid_size();
  std::vector<double> g = f.sample(m);
  for (auto& x : g) x = std::pow(x, p);
  return PeriodicFunction::from_samples(g, f.n_modes());
}

double holder_seminorm_estimate(const PeriodicFunction& f, double alpha) {
  const auto& g = f.grid_values();
  const int m = static_cast<int>(g.size());
  double best = 0.0;
  // Separations 2^-s realized as index offsets m/2, m/4, ..., 1.
  for (int off = m / 2; off >= 1; off /= 2) {
    const double sep = static_cast<double>(off) / m;
    const double wt = std::pow(sep, -alpha);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      int j = i + off;
      if (j >= m) j -= m;
      worst = std::max(worst, std::abs(g[i] - g[j]));
    }
    best = std::max(best, worst * wt);
  }
  return best;
}

double holder_norm(const PeriodicFunction& f, double r) {
  if (r < 0.0) throw InvalidRegularity("holder_norm requires r >= 0");
  const int n = static_cast<int>(std::floor(r));
  const double alpha = r - n;
  double norm = 0.0;
  PeriodicFunction d = f;
  for (int p = 0; p <= n; ++p) {
    norm = std::max(norm, d.grid_max_abs());
    if (p < n) d = d.derivative();
  }
  if (alpha > 0.0) norm = std::max(norm, holder_seminorm_estimate(d, alpha));
  return norm;
}

PeriodicFunction smooth_periodic(const PeriodicFunction& f, double t) {
  if (t <= 0.0) throw BadInput("smooth_periodic requires t > 0");
  std::vector<PeriodicFunction::cplx> c = f.coefficients();
  for (int k = 0; k <= f.n_modes(); ++k) {
    if (static_cast<double>(k) > t) c[k] = {0.0, 0.0};
  }
  return PeriodicFunction::from_coefficients(std::move(c));
}

}  // namespace circlefol
