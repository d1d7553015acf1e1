#pragma once

// Real-valued periodic function algebra on the circle T = R/Z, represented by
// a finite Fourier series with mode cap N.  Values are immutable after
// construction; every operation returns a new object.  The canonical
// equispaced grid view (a power of two >= 2N+2) is computed eagerly so shared
// instances are safe to read from any thread.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "circlefol/fourier_transforms.hpp"

namespace circlefol {

class PeriodicFunction {
 public:
  using cplx = std::complex<double>;

  // Zero function with the given mode cap.
  explicit PeriodicFunction(int n_modes);

  static PeriodicFunction zero(int n_modes) { return PeriodicFunction(n_modes); }
  static PeriodicFunction constant(double value, int n_modes);
  // amp_cos * cos(2 pi k theta) + amp_sin * sin(2 pi k theta)
  static PeriodicFunction harmonic(int k, double amp_cos, double amp_sin, int n_modes);
  // Half-sided spectrum c_0..c_N (c_0 imaginary part is dropped).
  static PeriodicFunction from_coefficients(std::vector<cplx> coeffs);
  // Projection of equispaced samples (any count >= 2*n_modes+1 is exact for
  // band-limited data; shorter sample sets alias).
  static PeriodicFunction from_samples(std::span<const double> samples, int n_modes);
  // Samples fn on an oversampled grid and projects.
  static PeriodicFunction from_function(const std::function<double(double)>& fn, int n_modes);

  int n_modes() const { return n_modes_; }
  int grid_size() const { return static_cast<int>(grid_.size()); }

  // Half-sided spectrum, k = 0..N.
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  // Signed-mode accessor with Hermitian symmetry; 0 beyond the cap.
  cplx coefficient(int k) const;

  // Canonical grid view: values at theta_i = i / grid_size().
  const std::vector<double>& grid_values() const { return grid_; }
  // Values at m equispaced points.
  std::vector<double> sample(int m) const;

  double operator()(double theta) const { return detail::eval_at(coeffs_, theta); }

  double mean() const { return coeffs_.empty() ? 0.0 : coeffs_[0].real(); }
  double grid_max_abs() const;
  double grid_min() const;
  double grid_max() const;

  PeriodicFunction derivative() const;
  // Rigid shift: returns theta -> f(theta + c) (exact in spectrum space).
  PeriodicFunction shifted(double c) const;
  // Truncates or zero-pads the spectrum to a new mode cap.
  PeriodicFunction with_modes(int n_modes) const;

  PeriodicFunction& operator+=(const PeriodicFunction& rhs);
  PeriodicFunction& operator-=(const PeriodicFunction& rhs);
  PeriodicFunction& operator*=(double s);
  PeriodicFunction& operator+=(double c);

  friend PeriodicFunction operator+(PeriodicFunction a, const PeriodicFunction& b) { return a += b; }
  friend PeriodicFunction operator-(PeriodicFunction a, const PeriodicFunction& b) { return a -= b; }
  friend PeriodicFunction operator*(PeriodicFunction a, double s) { return a *= s; }
  friend PeriodicFunction operator*(double s, PeriodicFunction a) { return a *= s; }
  friend PeriodicFunction operator+(PeriodicFunction a, double c) { return a += c; }
  friend PeriodicFunction operator-(PeriodicFunction a, double c) { return a += -c; }
  friend PeriodicFunction operator-(PeriodicFunction a);

  // Pointwise product, computed on a 2x oversampled grid and truncated back
  // to max(n_modes) of the operands.
  friend PeriodicFunction operator*(const PeriodicFunction& a, const PeriodicFunction& b);

 private:
  PeriodicFunction(std::vector<cplx> coeffs, std::vector<double> grid)
      : n_modes_(static_cast<int>(coeffs.size()) - 1),
        coeffs_(std::move(coeffs)),
        grid_(std::move(grid)) {}
  void refresh_grid();

  int n_modes_ = 0;
  std::vector<cplx> coeffs_;  // k = 0..N
  std::vector<double> grid_;  // canonical grid view
};

// Applies fn pointwise on a 2x oversampled grid and refits (estimator-grade:
// the result is the band-limited projection of fn(f)).
PeriodicFunction transform_pointwise(const PeriodicFunction& f,
                                     const std::function<double(double)>& fn);

// Pointwise quotient a/b with |b| floored at `floor` (throws BadInput below it).
PeriodicFunction pointwise_quotient(const PeriodicFunction& a, const PeriodicFunction& b,
                                    double floor);

// Pointwise integer power.
PeriodicFunction pointwise_power(const PeriodicFunction& f, int p);

// C^r norm estimator: max over p <= floor(r) of the grid sup of |D^p f|,
// together with the grid Hoelder quotient of D^floor(r) f at dyadic
// separations when r has a fractional part.  This is a lower bound of the
// true norm; see holder_seminorm_estimate.
double holder_norm(const PeriodicFunction& f, double r);

// Grid estimator of H_alpha(f) over pair separations 2^-m, m = 1..log2(grid).
double holder_seminorm_estimate(const PeriodicFunction& f, double alpha);

// Sharp Fourier cutoff: keeps modes |k| <= t, zeroes the rest.
PeriodicFunction smooth_periodic(const PeriodicFunction& f, double t);

}  // namespace circlefol
