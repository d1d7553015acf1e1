#pragma once

// Quasi-Newton solver for the conjugacy equation
//
//   f(W(theta, s)) = W(a(theta), lambda(theta) s)
//
// in the unknowns (W, a, lambda).  One step linearizes around the current
// triple, pulls the error back through the frame DW composed with the inner
// dynamics, fixes the graph-style gauge (Gamma_1^(0) = 0, Gamma_2^(1) = 0)
// and solves one twisted cohomological equation per Taylor order.

#include <optional>
#include <vector>

#include "circlefol/circle_map.hpp"
#include "circlefol/cohomology.hpp"
#include "circlefol/fourier_taylor.hpp"
#include "circlefol/map_model.hpp"

namespace circlefol {

struct ConjugacyTriple {
  FTPair W{FourierTaylor(0, 0, 1), FourierTaylor(0, 0, 0)};
  CircleMap a{PeriodicFunction(0)};  // internal circle dynamics
  PeriodicFunction lambda{0};        // normal contraction factor
  double delta = 0.3;                // s-domain radius used by the X^{r,delta} norms

  int order() const { return W.x.order(); }
  int n_modes() const { return W.x.n_modes(); }
};

// Structural admissibility: winding flags, shared discretization, a a
// diffeomorphism, ||lambda||_{C0 est} < 1.  Throws on violation.
void validate_triple(const ConjugacyTriple& u);

struct SolverConfig {
  double tol = 1e-12;       // stop when ||e||_{X^{0,delta} est} < tol
  int max_iters = 30;
  enum class Schedule { Fixed, NashMoser };
  Schedule schedule = Schedule::Fixed;
  double keep_fraction = 2.0 / 3.0;  // Fixed: cutoff t = keep_fraction * N
  double beta = 0.0;                 // NashMoser: t_n = e^{beta kappa^n}; 0 = auto (t_0 ~ N/4)
  double kappa = 1.75;
  double coho_tol = 1e-12;
  double det_floor = 1e-8;       // frame transversality threshold
  double division_floor = 1e-10; // floor for divisions by Da and lambda
};

struct StepDiagnostics {
  double residual_x0 = 0.0;  // ||e||_{X^{r,delta} est} for r = 0, 1, 2
  double residual_x1 = 0.0;
  double residual_x2 = 0.0;
  double dw_norm = 0.0;      // ||Delta_W||_{X^{0,delta} est}
  double da_norm = 0.0;      // ||Delta_a||_{C0 est}
  double dlambda_norm = 0.0; // ||Delta_lambda||_{C0 est}
  double frame_det_min = 0.0;
  int coho_rounds = 0;       // doubling rounds summed over the hierarchy
  double smoothing_cutoff = 0.0;  // 0 when no smoothing was applied
};

// Optional view into one step for diagnostics and consistency tests.
struct StepInternals {
  FTPair e;        // residual of the conjugacy equation
  FTPair e_tilde;  // -(DW o (a, lambda s))^{-1} e
  FTPair gamma;    // frame coordinates of the correction
  FourierTaylor m_series;  // e_tilde_2 - D lambda s Gamma_1
  CircleMap a_inverse;
  StepInternals() : m_series(0, 0), a_inverse(PeriodicFunction(0)) {}
};

struct Corrections {
  FTPair dW;
  PeriodicFunction da;
  PeriodicFunction dlambda;
};

// residual e = f o W - W(a, lambda s) (winding cancels; both components 0).
FTPair compute_error(const MapModel& f, const ConjugacyTriple& u);

// One linearization: corrections and diagnostics, without applying them.
// A residual already computed for u can be passed to avoid re-evaluating it.
Corrections newton_correction(const MapModel& f, const ConjugacyTriple& u,
                              const SolverConfig& cfg, StepDiagnostics& diag,
                              StepInternals* internals = nullptr,
                              const FTPair* residual = nullptr);

// One full iteration: corrections applied additively.  Throws NonDiffeo when
// the updated internal map loses monotonicity.
std::pair<ConjugacyTriple, StepDiagnostics> newton_step(const MapModel& f,
                                                        const ConjugacyTriple& u,
                                                        const SolverConfig& cfg = {});

struct SolveResult {
  ConjugacyTriple u;
  std::vector<StepDiagnostics> history;
  int iterations = 0;
  double final_residual = 0.0;
};

// Outer loop with smoothing of the corrections per the configured schedule.
// Throws MaxItersExceeded when the tolerance is not reached.
SolveResult solve(const MapModel& f, const ConjugacyTriple& u0, const SolverConfig& cfg = {});

// Product-space norm ||W1|| + ||W2|| + ||a_p|| + ||lambda|| at regularity r.
double triple_norm(const ConjugacyTriple& u, double r);
// Same norm applied to the componentwise difference of two triples.
double triple_distance(const ConjugacyTriple& u, const ConjugacyTriple& v, double r);

// Rigid reparameterization theta -> theta + c of a triple (a conjugacy;
// residual norms are invariant up to grid sampling).
ConjugacyTriple shift_triple(const ConjugacyTriple& u, double c);

}  // namespace circlefol
