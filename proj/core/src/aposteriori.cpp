#include "circlefol/aposteriori.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circlefol/cohomology.hpp"

namespace circlefol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// -num/den with the rigid-rotation convention: denominators of circle
// diffeomorphisms satisfy den = ln||.|| >= 0, and den ~ 0 with a contracting
// numerator means no upper regularity obstruction.  The tolerance absorbs
// the numerical-inversion noise on D(a^{-1}) for rigid rotations.
double log_ratio(double num_norm, double den_norm) {
  double num = -std::log(num_norm);
  double den = std::log(den_norm);
  if (den <= 1e-9) return num > 0.0 ? kInf : -kInf;
  return num / den;
}

}  // namespace

ConditionReport condition_report(const MapModel& f, const ConjugacyTriple& u,
                                 const ReportOptions& opts) {
  ConditionReport rep;
  rep.lambda_c0 = u.lambda.grid_max_abs();
  rep.lambda_star_n = opts.lambda_star_n;
  rep.lambda_star = dynamical_average(u.lambda, u.a, opts.lambda_star_n);

  PeriodicFunction da = u.a.lift_derivative();
  rep.da_c0 = da.grid_max_abs();
  double da_min = kInf;
  for (double x : da.grid_values()) da_min = std::min(da_min, std::abs(x));
  rep.da_inv_c0 = da_min > 0.0 ? 1.0 / da_min : kInf;
  CircleMap a_inv = invert_circle_map(u.a);
  rep.dainv_c0 = a_inv.lift_derivative().grid_max_abs();

  rep.m_max = std::min({log_ratio(rep.lambda_c0 * rep.da_inv_c0, rep.da_c0),
                        log_ratio(rep.lambda_c0, rep.dainv_c0),
                        log_ratio(rep.lambda_c0, rep.da_c0)}) -
              2.0;

  FTPair e = compute_error(f, u);
  rep.residual_x0 = ft_norm(e, 0.0, u.delta);
  rep.residual_x1 = ft_norm(e, 1.0, u.delta);
  rep.residual_x2 = ft_norm(e, 2.0, u.delta);

  FTMatrix dw{u.W.x.dtheta(), u.W.x.ds(), u.W.y.dtheta(), u.W.y.ds()};
  PeriodicFunction det = dw.a11.coefficient(0) * dw.a22.coefficient(0) -
                         dw.a12.coefficient(0) * dw.a21.coefficient(0);
  double det_min = kInf;
  for (double x : det.grid_values()) det_min = std::min(det_min, std::abs(x));
  rep.frame_det_min = det_min;

  rep.taylor_tail_ratio =
      std::max(taylor_tail_ratio(u.W.x, u.delta), taylor_tail_ratio(u.W.y, u.delta));
  if (u.order() >= 4) {
    rep.analyticity_radius =
        std::min(analyticity_radius_estimate(u.W.x), analyticity_radius_estimate(u.W.y));
  } else {
    rep.analyticity_radius = kInf;
  }

  rep.contraction_ok = rep.lambda_c0 < 1.0 || rep.lambda_star < 1.0;
  rep.regularity_ok = rep.m_max >= 2.0;
  rep.frame_ok = rep.frame_det_min >= opts.thresholds.frame_det;
  rep.residual_small = rep.residual_x0 <= opts.thresholds.residual;

  if (rep.analyticity_radius < u.delta) {
    rep.warnings.push_back("analyticity radius estimate below delta; shrink delta");
  }
  if (rep.taylor_tail_ratio > 1e-6) {
    rep.warnings.push_back("Taylor truncation tail ratio above 1e-6; raise the order");
  }
  return rep;
}

Verdict verify_aposteriori(const ConditionReport& report, const VerdictThresholds& thresholds) {
  Verdict v;
  bool contraction = report.contraction_ok;
  bool regularity = report.regularity_ok;
  bool frame = report.frame_det_min >= thresholds.frame_det;
  bool residual = report.residual_x0 <= thresholds.residual;
  auto line = [&](const char* name, bool ok, const std::string& detail) {
    v.explanations.push_back(std::string(name) + ": " + (ok ? "ok" : "FAIL") + " (" + detail + ")");
  };
  line("contraction_ok", contraction,
       "lambda_c0=" + std::to_string(report.lambda_c0) +
           ", lambda_star=" + std::to_string(report.lambda_star));
  line("regularity_ok", regularity, "m_max=" + std::to_string(report.m_max));
  line("frame_ok", frame, "frame_det_min=" + std::to_string(report.frame_det_min));
  line("residual_small", residual, "residual_x0=" + std::to_string(report.residual_x0));
  v.pass = contraction && regularity && frame && residual;
  return v;
}

}  // namespace circlefol
