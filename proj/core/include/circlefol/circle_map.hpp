#pragma once

// Lifts of degree-1 circle diffeomorphisms: ell(theta) = theta + p(theta)
// with p periodic, so ell(theta + 1) = ell(theta) + 1 by construction.

#include "circlefol/periodic_function.hpp"

namespace circlefol {

class CircleMap {
 public:
  explicit CircleMap(PeriodicFunction periodic_part) : p_(std::move(periodic_part)) {}

  static CircleMap identity(int n_modes) { return CircleMap(PeriodicFunction::zero(n_modes)); }
  static CircleMap rotation(double omega, int n_modes) {
    return CircleMap(PeriodicFunction::constant(omega, n_modes));
  }

  const PeriodicFunction& periodic_part() const { return p_; }
  int n_modes() const { return p_.n_modes(); }

  // Lift value ell(theta) = theta + p(theta).
  double lift(double theta) const { return theta + p_(theta); }
  // D ell = 1 + Dp as a periodic function.
  PeriodicFunction lift_derivative() const { return p_.derivative() + 1.0; }
  // min over an oversampled grid of D ell.
  double min_lift_derivative() const;
  bool is_diffeomorphism(double floor = 0.0) const { return min_lift_derivative() > floor; }

 private:
  PeriodicFunction p_;
};

// theta -> pf(ell_a(theta)); result mode cap = pf.n_modes(), evaluated on a
// 2x oversampled grid (aliasing accepted).
PeriodicFunction compose_with_circle_map(const PeriodicFunction& pf, const CircleMap& a);

// (outer after inner)(theta) = ell_outer(ell_inner(theta)).
CircleMap compose(const CircleMap& outer, const CircleMap& inner);

// a^{o k} by binary doubling, k >= 0.
CircleMap iterate_circle_map(const CircleMap& a, int k);

// Inverse lift by per-grid-point Newton iteration with bisection fallback.
// Throws NotADiffeomorphism if min D ell <= 0, NoConvergence past the
// per-point iteration cap.
CircleMap invert_circle_map(const CircleMap& a);

// Solves ell_a(x) = y for a single y (helper shared with bootstrap).
double invert_lift_at(const CircleMap& a, double y);

}  // namespace circlefol
