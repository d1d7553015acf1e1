#pragma once

#include <stdexcept>
#include <string>

namespace circlefol {

// Base class for all structured solver errors.  `code()` is the stable
// machine-readable name printed by the CLI on failure.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define CIRCLEFOL_DEFINE_ERROR(Name)                        \
  class Name : public Error {                               \
   public:                                                  \
    explicit Name(const std::string& what)                  \
        : Error(#Name, what) {}                             \
  }

CIRCLEFOL_DEFINE_ERROR(NotADiffeomorphism);
CIRCLEFOL_DEFINE_ERROR(NoConvergence);
CIRCLEFOL_DEFINE_ERROR(InvalidRegularity);
CIRCLEFOL_DEFINE_ERROR(OrderMismatch);
CIRCLEFOL_DEFINE_ERROR(SingularFrame);
CIRCLEFOL_DEFINE_ERROR(NotContracting);
CIRCLEFOL_DEFINE_ERROR(NonPositiveLambda);
CIRCLEFOL_DEFINE_ERROR(SmallDivisorOverflow);
CIRCLEFOL_DEFINE_ERROR(DomainError);
CIRCLEFOL_DEFINE_ERROR(NoAttractorFound);
CIRCLEFOL_DEFINE_ERROR(BundleIterationStalled);
CIRCLEFOL_DEFINE_ERROR(StepTooSmall);
CIRCLEFOL_DEFINE_ERROR(MaxItersExceeded);
CIRCLEFOL_DEFINE_ERROR(NonDiffeo);
CIRCLEFOL_DEFINE_ERROR(BadInput);

#undef CIRCLEFOL_DEFINE_ERROR

}  // namespace circlefol
