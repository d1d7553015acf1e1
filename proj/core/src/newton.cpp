#include "circlefol/newton.hpp"

#include <algorithm>
#include <cmath>

#include "circlefol/errors.hpp"
#include "circlefol/fourier_transforms.hpp"

namespace circlefol {

void validate_triple(const ConjugacyTriple& u) {
  if (u.W.x.winding() != 1 || u.W.y.winding() != 0) {
    throw BadInput("triple requires winding (1, 0)");
  }
  if (u.W.x.order() != u.W.y.order()) throw OrderMismatch("pair orders differ");
  if (u.delta <= 0.0) throw BadInput("delta must be positive");
  if (!u.a.is_diffeomorphism()) {
    throw NotADiffeomorphism("triple: internal map has min D ell <= 0");
  }
  if (u.lambda.grid_max_abs() >= 1.0) {
    throw NotContracting("triple: ||lambda||_{C0 est} >= 1");
  }
}

FTPair compute_error(const MapModel& f, const ConjugacyTriple& u) {
  FTPair fw = apply_map_jet(f, u.W);
  const int n = u.n_modes();
  const int m = 2 * detail::canonical_grid_size(n);
  InnerCompositionPlan plan = InnerCompositionPlan::build(u.a, u.lambda, u.order(), m);
  FTPair wi{ft_compose_inner(u.W.x, plan), ft_compose_inner(u.W.y, plan)};
  return FTPair{fw.x - wi.x, fw.y - wi.y};
}

namespace {

double frame_det_min_at_s0(const FTMatrix& m) {
  PeriodicFunction det = m.a11.coefficient(0) * m.a22.coefficient(0) -
                         m.a12.coefficient(0) * m.a21.coefficient(0);
  const auto& g = det.grid_values();
  double v = g.empty() ? 0.0 : std::abs(g[0]);
  for (double x : g) v = std::min(v, std::abs(x));
  return v;
}

double smoothing_cutoff(const SolverConfig& cfg, int iteration, int n_modes) {
  if (cfg.schedule == SolverConfig::Schedule::Fixed) {
    return std::max(1.0, cfg.keep_fraction * n_modes);
  }
  double beta = cfg.beta > 0.0 ? cfg.beta : std::log(std::max(2.0, n_modes / 4.0));
  double t = std::exp(beta * std::pow(cfg.kappa, iteration));
  return std::min(t, static_cast<double>(n_modes));
}

}  // namespace

Corrections newton_correction(const MapModel& f, const ConjugacyTriple& u,
                              const SolverConfig& cfg, StepDiagnostics& diag,
                              StepInternals* internals, const FTPair* residual) {
  const int L = u.order();
  const int n = u.n_modes();
  const int m = 2 * detail::canonical_grid_size(n);
  const double delta = u.delta;

  InnerCompositionPlan plan = InnerCompositionPlan::build(u.a, u.lambda, L, m);

  // Residual and its norms.
  FTPair e = residual ? *residual : [&] {
    FTPair fw = apply_map_jet(f, u.W);
    return FTPair{fw.x - ft_compose_inner(u.W.x, plan), fw.y - ft_compose_inner(u.W.y, plan)};
  }();
  diag.residual_x0 = ft_norm(e, 0.0, delta);
  diag.residual_x1 = ft_norm(e, 1.0, delta);
  diag.residual_x2 = ft_norm(e, 2.0, delta);

  // Frame DW and its inner composition DW o (a, lambda s).
  FTMatrix dw{u.W.x.dtheta(), u.W.x.ds(), u.W.y.dtheta(), u.W.y.ds()};
  FTMatrix dwi{ft_compose_inner(dw.a11, plan), ft_compose_inner(dw.a12, plan),
               ft_compose_inner(dw.a21, plan), ft_compose_inner(dw.a22, plan)};
  diag.frame_det_min = frame_det_min_at_s0(dwi);

  // e_tilde = -(DW o (a, lambda s))^{-1} e.
  FTMatrix frame_inv = jet_matrix_inverse(dwi, cfg.det_floor);
  FTPair et = ft_matvec(frame_inv, e);
  et.x *= -1.0;
  et.y *= -1.0;

  // Division floors checked on the oversampled grid the quotients use.
  auto min_abs_oversampled = [](const PeriodicFunction& g) {
    double v = 1e300;
    for (double x : g.sample(2 * g.grid_size())) v = std::min(v, std::abs(x));
    return v;
  };
  PeriodicFunction da_lift = u.a.lift_derivative();
  if (min_abs_oversampled(da_lift) < cfg.division_floor) {
    throw NotContracting("newton_correction: Da below division floor");
  }
  const double lambda_min = min_abs_oversampled(u.lambda);

  CohomologyOptions copts;
  copts.tol = cfg.coho_tol;
  copts.on_floor = CohomologyOptions::FloorPolicy::Accept;
  int coho_rounds = 0;

  // Angular hierarchy: Delta_a = -e_tilde_1^(0), Gamma_1^(0) = 0, and for
  // j >= 1:  Gamma_1^(j) = (lambda^j / Da) Gamma_1^(j)(a) + e_tilde_1^(j) / Da.
  PeriodicFunction delta_a = -et.x.coefficient(0);
  FourierTaylor gamma1(L, n, 0);
  for (int j = 1; j <= L; ++j) {
    PeriodicFunction twist =
        pointwise_quotient(pointwise_power(u.lambda, j), da_lift, cfg.division_floor);
    PeriodicFunction forcing =
        pointwise_quotient(et.x.coefficient(j), da_lift, cfg.division_floor);
    CohomologySolution sol = solve_cohomological(twist, u.a, forcing, copts);
    gamma1.coefficient(j) = sol.phi;
    coho_rounds += sol.rounds;
  }

  // M = e_tilde_2 - D lambda s Gamma_1.
  FourierTaylor m_series = et.y - ft_mul(u.lambda.derivative(), gamma1).times_s();

  PeriodicFunction delta_lambda = -m_series.coefficient(1);

  // Normal hierarchy: Gamma_2^(1) = 0; the s^0 equation is solved through
  // a^{-1}, and for j >= 2 with twist lambda^{j-1}, forcing M^(j)/lambda.
  CircleMap a_inv = invert_circle_map(u.a);
  FourierTaylor gamma2(L, n, 0);
  {
    PeriodicFunction twist = compose_with_circle_map(u.lambda, a_inv);
    PeriodicFunction forcing = -compose_with_circle_map(m_series.coefficient(0), a_inv);
    CohomologySolution sol = solve_cohomological(twist, a_inv, forcing, copts);
    gamma2.coefficient(0) = sol.phi;
    coho_rounds += sol.rounds;
  }
  for (int j = 2; j <= L; ++j) {
    if (lambda_min < cfg.division_floor) {
      throw NotContracting("newton_correction: lambda below division floor");
    }
    PeriodicFunction twist = pointwise_power(u.lambda, j - 1);
    PeriodicFunction forcing =
        pointwise_quotient(m_series.coefficient(j), u.lambda, cfg.division_floor);
    CohomologySolution sol = solve_cohomological(twist, u.a, forcing, copts);
    gamma2.coefficient(j) = sol.phi;
    coho_rounds += sol.rounds;
  }
  diag.coho_rounds = coho_rounds;

  FTPair gamma{std::move(gamma1), std::move(gamma2)};
  FTPair dW = ft_matvec(dw, gamma);

  diag.dw_norm = ft_norm(dW, 0.0, delta);
  diag.da_norm = delta_a.grid_max_abs();
  diag.dlambda_norm = delta_lambda.grid_max_abs();

  if (internals) {
    internals->e = e;
    internals->e_tilde = et;
    internals->gamma = gamma;
    internals->m_series = m_series;
    internals->a_inverse = a_inv;
  }
  return Corrections{std::move(dW), std::move(delta_a), std::move(delta_lambda)};
}

namespace {

ConjugacyTriple apply_corrections(const ConjugacyTriple& u, const Corrections& c) {
  ConjugacyTriple out = u;
  out.W.x += c.dW.x;
  out.W.y += c.dW.y;
  out.a = CircleMap(u.a.periodic_part() + c.da);
  out.lambda = u.lambda + c.dlambda;
  if (!out.a.is_diffeomorphism()) {
    throw NonDiffeo("newton_step: updated internal map lost monotonicity");
  }
  return out;
}

}  // namespace

std::pair<ConjugacyTriple, StepDiagnostics> newton_step(const MapModel& f,
                                                        const ConjugacyTriple& u,
                                                        const SolverConfig& cfg) {
  StepDiagnostics diag;
  Corrections c = newton_correction(f, u, cfg, diag);
  return {apply_corrections(u, c), diag};
}

SolveResult solve(const MapModel& f, const ConjugacyTriple& u0, const SolverConfig& cfg) {
  validate_triple(u0);
  SolveResult res;
  res.u = u0;
  for (int it = 0; it <= cfg.max_iters; ++it) {
    FTPair e = compute_error(f, res.u);
    res.final_residual = ft_norm(e, 0.0, res.u.delta);
    if (res.final_residual < cfg.tol) {
      return res;
    }
    if (it == cfg.max_iters) break;

    StepDiagnostics diag;
    Corrections c = newton_correction(f, res.u, cfg, diag, nullptr, &e);

    double t = smoothing_cutoff(cfg, it, res.u.n_modes());
    diag.smoothing_cutoff = t;
    if (t < res.u.n_modes()) {
      c.dW.x = ft_smooth(c.dW.x, t);
      c.dW.y = ft_smooth(c.dW.y, t);
      c.da = smooth_periodic(c.da, t);
      c.dlambda = smooth_periodic(c.dlambda, t);
    }
    res.u = apply_corrections(res.u, c);
    res.history.push_back(diag);
    res.iterations = it + 1;
  }
  throw MaxItersExceeded("solve: residual " + std::to_string(res.final_residual) +
                         " above tol after " + std::to_string(cfg.max_iters) + " iterations");
}

double triple_norm(const ConjugacyTriple& u, double r) {
  return ft_norm(u.W.x, r, u.delta) + ft_norm(u.W.y, r, u.delta) +
         holder_norm(u.a.periodic_part(), r) + holder_norm(u.lambda, r);
}

double triple_distance(const ConjugacyTriple& u, const ConjugacyTriple& v, double r) {
  FourierTaylor dx = u.W.x - v.W.x;
  FourierTaylor dy = u.W.y - v.W.y;
  PeriodicFunction dp = u.a.periodic_part() - v.a.periodic_part();
  PeriodicFunction dl = u.lambda - v.lambda;
  return ft_norm(dx, r, u.delta) + ft_norm(dy, r, u.delta) + holder_norm(dp, r) +
         holder_norm(dl, r);
}

ConjugacyTriple shift_triple(const ConjugacyTriple& u, double c) {
  auto shift_ft = [&](const FourierTaylor& f) {
    std::vector<PeriodicFunction> coeffs;
    coeffs.reserve(f.order() + 1);
    for (int j = 0; j <= f.order(); ++j) coeffs.push_back(f.coefficient(j).shifted(c));
    FourierTaylor out(std::move(coeffs), f.winding());
    // W(g(theta), s) with g = theta + c: the winding term contributes the
    // constant c to order 0.
    if (f.winding() != 0) out.coefficient(0) += f.winding() * c;
    return out;
  };
  ConjugacyTriple out = u;
  out.W.x = shift_ft(u.W.x);
  out.W.y = shift_ft(u.W.y);
  // g^{-1} o a o g has lift a(theta + c) - c; its periodic part is p_a(theta+c).
  out.a = CircleMap(u.a.periodic_part().shifted(c));
  out.lambda = u.lambda.shifted(c);
  return out;
}

}  // namespace circlefol
