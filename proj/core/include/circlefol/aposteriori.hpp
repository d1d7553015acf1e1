#pragma once

// Condition-number evaluation on a computed triple: contraction norms, the
// admissible regularity window, residual norms, frame transversality and
// truncation diagnostics, plus a pass/fail verdict over configurable
// thresholds.  All quantities are grid estimators evaluated at the given
// triple (not over a neighborhood of it).

#include <string>
#include <vector>

#include "circlefol/map_model.hpp"
#include "circlefol/newton.hpp"

namespace circlefol {

struct VerdictThresholds {
  double residual = 1e-8;
  double frame_det = 1e-8;
};

struct ConditionReport {
  double lambda_c0 = 0.0;      // ||lambda||_{C0 est}
  double lambda_star = 0.0;    // dynamical average at lambda_star_n
  int lambda_star_n = 0;
  double da_c0 = 0.0;          // ||Da||_{C0 est}
  double da_inv_c0 = 0.0;      // ||(Da)^{-1}||_{C0 est} = 1 / min |Da|
  double dainv_c0 = 0.0;       // ||D(a^{-1})||_{C0 est}
  double m_max = 0.0;          // regularity window bound, evaluated at u only
  double residual_x0 = 0.0;    // ||e||_{X^{r,delta} est}, r = 0, 1, 2
  double residual_x1 = 0.0;
  double residual_x2 = 0.0;
  double frame_det_min = 0.0;
  double taylor_tail_ratio = 0.0;  // max over the two components of W
  double analyticity_radius = 0.0; // min over the two components of W
  bool contraction_ok = false;     // lambda_c0 < 1 or lambda_star < 1
  bool regularity_ok = false;      // m_max >= 2
  bool frame_ok = false;
  bool residual_small = false;
  std::vector<std::string> warnings;
};

struct ReportOptions {
  int lambda_star_n = 64;
  VerdictThresholds thresholds;
};

ConditionReport condition_report(const MapModel& f, const ConjugacyTriple& u,
                                 const ReportOptions& opts = {});

struct Verdict {
  bool pass = false;
  std::vector<std::string> explanations;  // one line per flag
};

Verdict verify_aposteriori(const ConditionReport& report, const VerdictThresholds& thresholds);

}  // namespace circlefol
