#pragma once

// Zeroth-order parameter continuation: the converged triple at one parameter
// value is reused verbatim as the initial guess at the next, with the step
// halved on solver failure and grown again after fast solves.

#include <functional>
#include <string>
#include <vector>

#include "circlefol/aposteriori.hpp"
#include "circlefol/bootstrap.hpp"
#include "circlefol/newton.hpp"

namespace circlefol {

// Zeroth-order warm start (no tangent predictor).
inline ConjugacyTriple continuation_step(const ConjugacyTriple& u_prev, double /*eps_next*/) {
  return u_prev;
}

struct ContinuationConfig {
  std::string parameter;
  double start = 0.0;
  double end = 0.0;
  double step = 0.0;               // requested (and maximal) step magnitude
  double min_step_factor = 1.0 / 64.0;  // StepTooSmall below step * this
  double grow_factor = 1.5;
  int fast_iters = 2;              // grow the step after solves this fast
};

struct ContinuationRecord {
  double value = 0.0;
  ConjugacyTriple u;
  ConditionReport report;
  int iterations = 0;
};

// Sweeps `parameter` from start to end.  The first point is seeded by
// initial_guess; later points reuse the previous solution.  Throws
// StepTooSmall when halving reaches the configured floor.
std::vector<ContinuationRecord> run_continuation(
    const std::string& model_name, const std::map<std::string, double>& base_params,
    const ContinuationConfig& ccfg, const SolverConfig& scfg, const BootstrapConfig& bcfg,
    const ReportOptions& ropts = {},
    const std::function<void(const ContinuationRecord&)>& on_point = nullptr);

}  // namespace circlefol
