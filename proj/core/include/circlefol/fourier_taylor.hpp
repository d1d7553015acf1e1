#pragma once

// Fourier-Taylor algebra for functions u(theta, s) = w*theta +
// sum_{j<=L} u^{(j)}(theta) s^j with periodic coefficients, together with the
// pair / 2x2-matrix wrappers used by the invariance solver.  The winding flag
// w in {0,1} marks the non-contractible angular component of an embedding.

#include <vector>

#include "circlefol/circle_map.hpp"
#include "circlefol/periodic_function.hpp"
#include "circlefol/taylor_jet.hpp"

namespace circlefol {

class FourierTaylor {
 public:
  FourierTaylor(int order, int n_modes, int winding = 0);
  // Takes ownership of per-order coefficients (all sharing one mode cap).
  FourierTaylor(std::vector<PeriodicFunction> coeffs, int winding = 0);

  static FourierTaylor zero(int order, int n_modes) { return FourierTaylor(order, n_modes); }
  static FourierTaylor constant(double v, int order, int n_modes);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int n_modes() const { return coeffs_.empty() ? 0 : coeffs_[0].n_modes(); }
  int winding() const { return winding_; }

  const PeriodicFunction& coefficient(int j) const { return coeffs_[j]; }
  PeriodicFunction& coefficient(int j) { return coeffs_[j]; }
  const std::vector<PeriodicFunction>& coefficients() const { return coeffs_; }

  // Full value w*theta + sum u_j(theta) s^j.
  double operator()(double theta, double s) const;

  // Per-point jet of the *periodic part plus winding constant*, i.e. the jet
  // of u at fixed theta (the winding contributes w*theta to order 0).
  TaylorJet jet_at(double theta) const;

  FourierTaylor& operator+=(const FourierTaylor& rhs);
  FourierTaylor& operator-=(const FourierTaylor& rhs);
  FourierTaylor& operator*=(double s);
  friend FourierTaylor operator+(FourierTaylor a, const FourierTaylor& b) { return a += b; }
  friend FourierTaylor operator-(FourierTaylor a, const FourierTaylor& b) { return a -= b; }
  friend FourierTaylor operator*(FourierTaylor a, double s) { return a *= s; }
  friend FourierTaylor operator*(double s, FourierTaylor a) { return a *= s; }
  friend FourierTaylor operator-(FourierTaylor a) { return a *= -1.0; }

  // d/dtheta (the winding term contributes the constant w at order 0;
  // result has winding 0).
  FourierTaylor dtheta() const;
  // d/ds (drops the winding term; result has winding 0).
  FourierTaylor ds() const;
  // Multiplication by s: shifts orders up, truncating at L.
  FourierTaylor times_s() const;
  FourierTaylor truncated(int order) const;

 private:
  std::vector<PeriodicFunction> coeffs_;
  int winding_ = 0;
};

struct FTPair {
  FourierTaylor x{0, 0, 0};  // angular component
  FourierTaylor y{0, 0, 0};  // normal component
};

struct FTMatrix {
  FourierTaylor a11{0, 0, 0}, a12{0, 0, 0}, a21{0, 0, 0}, a22{0, 0, 0};
};

// Cauchy product in s truncated at the common order; requires winding 0.
FourierTaylor ft_mul(const FourierTaylor& u, const FourierTaylor& v);
// Product with an order-0 periodic factor.
FourierTaylor ft_mul(const PeriodicFunction& p, const FourierTaylor& u);

// Precomputed data for composing with (a(theta), lambda(theta) s) on the
// oversampled grid: lift values of a and powers of lambda.
struct InnerCompositionPlan {
  int m = 0;                      // sample count
  std::vector<double> a_lift;     // ell_a at theta_i
  std::vector<double> a_periodic; // p_a at theta_i
  std::vector<double> lambda_pow; // [order+1][m] row-major: lambda^j
  int max_order = 0;
  static InnerCompositionPlan build(const CircleMap& a, const PeriodicFunction& lambda,
                                    int max_order, int m);
};

// u(a(theta), lambda(theta) s); winding w contributes w * ell_a(theta),
// keeping the result's winding equal to u's.
FourierTaylor ft_compose_inner(const FourierTaylor& u, const CircleMap& a,
                               const PeriodicFunction& lambda);
FourierTaylor ft_compose_inner(const FourierTaylor& u, const InnerCompositionPlan& plan);

// X^{r,delta} norm estimator: sum_j holder_norm(u_j, r) delta^j (periodic
// part only; the winding term is excluded).
double ft_norm(const FourierTaylor& u, double r, double delta);
double ft_norm(const FTPair& u, double r, double delta);

// Coefficient-wise sharp Fourier cutoff (s-direction untouched).
FourierTaylor ft_smooth(const FourierTaylor& u, double t);

// 2x2 inverse to truncation order: adjugate over determinant with the
// reciprocal computed as a truncated power series per grid point.  Throws
// SingularFrame when |det at s=0| < det_floor anywhere on the grid.
FTMatrix jet_matrix_inverse(const FTMatrix& m, double det_floor = 1e-8);

// Matrix-vector product (all winding 0).
FTPair ft_matvec(const FTMatrix& m, const FTPair& v);

// Ratio of the top-order term to the whole norm, used as a truncation-tail
// diagnostic: ||u^{(L)}|| delta^L / sum_j ||u^{(j)}|| delta^j (C^0 estimators).
double taylor_tail_ratio(const FourierTaylor& u, double delta);

// Reciprocal of the fitted geometric growth rate of ||u^{(j)}||_{C0} over the
// top half of orders; +infinity when the fit slope is <= 0 or the top
// coefficients vanish.  Requires order >= 4.
double analyticity_radius_estimate(const FourierTaylor& u);

}  // namespace circlefol
