#pragma once

#include <stdexcept>
#include <string>

namespace gneseek {

// Failure categories; the CLI maps them to process exit codes.
enum class ErrorCategory : int {
  Config = 2,      // bad input: config files, graphs, dimensions
  Assumption = 3,  // model assumption violated (monotonicity, spectrum, Slater)
  Numerical = 4,   // non-finite state, failed eigensolver, no convergence
  Bound = 5,       // a runtime-checked theoretical bound failed in hard mode
};

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, const std::string& what)
      : std::runtime_error(what), cat_(cat) {}
  ErrorCategory category() const { return cat_; }
  int exit_code() const { return static_cast<int>(cat_); }

private:
  ErrorCategory cat_;
};

#define GNESEEK_DEFINE_ERROR(Name, Cat)                           \
  struct Name : Error {                                           \
    explicit Name(const std::string& w) : Error(Cat, #Name ": " + w) {} \
  }

GNESEEK_DEFINE_ERROR(ParseError, ErrorCategory::Config);
GNESEEK_DEFINE_ERROR(ValidationError, ErrorCategory::Config);
GNESEEK_DEFINE_ERROR(InvalidEdge, ErrorCategory::Config);
GNESEEK_DEFINE_ERROR(DisconnectedGraph, ErrorCategory::Config);
GNESEEK_DEFINE_ERROR(GeometrySetMismatch, ErrorCategory::Config);
GNESEEK_DEFINE_ERROR(LengthMismatch, ErrorCategory::Config);

GNESEEK_DEFINE_ERROR(AssumptionViolation, ErrorCategory::Assumption);
GNESEEK_DEFINE_ERROR(DegenerateSpectrum, ErrorCategory::Assumption);
GNESEEK_DEFINE_ERROR(InfeasibleProblem, ErrorCategory::Assumption);

GNESEEK_DEFINE_ERROR(NumericalFailure, ErrorCategory::Numerical);
GNESEEK_DEFINE_ERROR(NoConvergence, ErrorCategory::Numerical);
GNESEEK_DEFINE_ERROR(NonFiniteState, ErrorCategory::Numerical);
GNESEEK_DEFINE_ERROR(NonFiniteInput, ErrorCategory::Numerical);
GNESEEK_DEFINE_ERROR(DomainError, ErrorCategory::Numerical);

GNESEEK_DEFINE_ERROR(BoundViolated, ErrorCategory::Bound);

#undef GNESEEK_DEFINE_ERROR

}  // namespace gneseek
