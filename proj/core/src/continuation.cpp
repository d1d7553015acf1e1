#include "circlefol/continuation.hpp"

#include <cmath>

#include "circlefol/errors.hpp"

namespace circlefol {

std::vector<ContinuationRecord> run_continuation(
    const std::string& model_name, const std::map<std::string, double>& base_params,
    const ContinuationConfig& ccfg, const SolverConfig& scfg, const BootstrapConfig& bcfg,
    const ReportOptions& ropts,
    const std::function<void(const ContinuationRecord&)>& on_point) {
  if (ccfg.step <= 0.0) throw BadInput("continuation step must be positive");
  auto& reg = ModelRegistry::instance();
  auto model_at = [&](double value) {
    auto params = base_params;
    params[ccfg.parameter] = value;
    return reg.create(model_name, params);
  };

  std::vector<ContinuationRecord> records;
  const double dir = ccfg.end >= ccfg.start ? 1.0 : -1.0;

  // First point from scratch.
  {
    ModelPtr f = model_at(ccfg.start);
    ConjugacyTriple u0 = initial_guess(*f, bcfg);
    SolveResult res = solve(*f, u0, scfg);
    records.push_back(ContinuationRecord{ccfg.start, res.u, condition_report(*f, res.u, ropts),
                                         res.iterations});
    if (on_point) on_point(records.back());
  }

  double value = ccfg.start;
  double step = ccfg.step;
  const double floor = ccfg.step * ccfg.min_step_factor;
  while (dir * (ccfg.end - value) > 1e-12) {
    double next = value + dir * step;
    if (dir * (next - ccfg.end) > 0.0) next = ccfg.end;
    ModelPtr f = model_at(next);
    try {
      SolveResult res = solve(*f, continuation_step(records.back().u, next), scfg);
      records.push_back(
          ContinuationRecord{next, res.u, condition_report(*f, res.u, ropts), res.iterations});
      if (on_point) on_point(records.back());
      value = next;
      if (res.iterations <= ccfg.fast_iters) {
        step = std::min(step * ccfg.grow_factor, ccfg.step);
      }
    } catch (const Error&) {
      step *= 0.5;
      if (step < floor) {
        throw StepTooSmall("run_continuation: step fell below floor at " +
                           ccfg.parameter + " = " + std::to_string(value));
      }
    }
  }
  return records;
}

}  // namespace circlefol
