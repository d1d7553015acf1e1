#pragma once

// Twisted cohomological equations over circle maps:
//
//   phi(theta) = l(theta) phi(a(theta)) + eta(theta),
//
// solved by summing phi = sum_j l^{[j]} eta(a^{o j}) with binary doubling of
// the cocycle l^{[k]}(theta) = l(theta) l(a(theta)) ... l(a^{o(k-1)}(theta)).
// Also: dynamical averages, the rotation-case reduction of a positive twist
// to its geometric mean, and the C^r solvability bound.

#include <vector>

#include "circlefol/circle_map.hpp"
#include "circlefol/periodic_function.hpp"

namespace circlefol {

// Doubling state: after r rounds holds k = 2^r, l^{[k]}, a^{o k} and the
// partial sum S_k = sum_{j<k} l^{[j]} eta(a^{o j}).
struct CocycleState {
  PeriodicFunction l_k;
  CircleMap a_k;
  PeriodicFunction partial_sum;
  long terms = 1;

  static CocycleState initial(const PeriodicFunction& l, const CircleMap& a,
                              const PeriodicFunction& eta);
  // S_{2k} = S_k + l^{[k]} (S_k o a^{o k}); l and a double likewise.
  void advance();
};

// l^{[k]} for arbitrary k >= 0 in O(log k) composition rounds.
PeriodicFunction cocycle_product(const PeriodicFunction& l, const CircleMap& a, long k);

struct CohomologyOptions {
  double tol = 1e-12;
  int k_max = 64;       // largest doubling power probed for contraction onset
  int max_rounds = 48;  // doubling rounds cap
  // What to do when the measured residual stalls above tol while the
  // geometric tail bound is already met (the discretization floor): refuse,
  // or return the best sum with the honest residual recorded.  The quasi-
  // Newton engine uses Accept; rough problems floor above machine precision
  // and the outer iteration self-corrects.
  enum class FloorPolicy { Throw, Accept };
  FloorPolicy on_floor = FloorPolicy::Throw;
};

struct CohomologySolution {
  PeriodicFunction phi;
  int rounds = 0;           // doubling rounds performed
  long terms = 0;           // orbit terms summed (2^rounds)
  double tail_bound = 0.0;  // geometric bound on the dropped tail
  double residual = 0.0;    // measured ||phi - l (phi o a) - eta||_{C0 est}
  int contraction_k = 1;    // first doubling power with ||l^{[k]}|| < 1
  double contraction_norm = 0.0;   // ||l^{[contraction_k]}||_{C0 est}
  double sharp_criterion = 0.0;    // ||l^{[k]} D(a^{o k})||_{C0 est} at that k
};

// Solves phi = l (phi o a) + eta.  Throws NotContracting when no doubling
// power k <= k_max has ||l^{[k]}||_{C0 est} < 1, NoConvergence when the tail
// bound or measured residual stalls above tol.
CohomologySolution solve_cohomological(const PeriodicFunction& l, const CircleMap& a,
                                       const PeriodicFunction& eta,
                                       const CohomologyOptions& opts = {});
inline CohomologySolution solve_cohomological(const PeriodicFunction& l, const CircleMap& a,
                                              const PeriodicFunction& eta, double tol) {
  CohomologyOptions o;
  o.tol = tol;
  return solve_cohomological(l, a, eta, o);
}

// (||lambda^{[n]}||_{C0 est})^{1/n}.
double dynamical_average(const PeriodicFunction& lambda, const CircleMap& a, long n);
// The sequence over n in `ns`, for convergence inspection.
std::vector<double> dynamical_average_sequence(const PeriodicFunction& lambda,
                                               const CircleMap& a,
                                               const std::vector<long>& ns);

struct LambdaReduction {
  double lambda_bar = 0.0;   // exp of the circle average of log lambda
  PeriodicFunction r;        // conjugacy factor, normalized r_hat_0 = 0 in log
  double residual = 0.0;     // ||r(.+omega) lambda / r - lambda_bar||_{C0 est}
};

// Over a rigid rotation by omega, reduces a positive twist to the constant
// lambda_bar = exp(int log lambda) by solving the additive cohomology
// equation for log r with Fourier division.  Throws NonPositiveLambda when
// lambda is not positive on the grid and SmallDivisorOverflow when some
// |1 - e^{2 pi i k omega}| < 1e-10 within the mode range.
LambdaReduction reduce_lambda_rotation(const PeriodicFunction& lambda, double omega,
                                       double tol);

// r_max = -ln ||l||_{C0 est} / ln ||Da||_{C0 est}; +infinity when
// ||Da||_{C0 est} <= 1.  Throws NotContracting when ||l|| >= 1.
double regularity_bound(const PeriodicFunction& l, const CircleMap& a);

}  // namespace circlefol
