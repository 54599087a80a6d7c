#pragma once

#include <stdexcept>
#include <string>

namespace oddpath {

enum class Errc {
  InvalidInput,
  ConservativenessViolation,
  ConstraintCoverage,
  InvalidEndpoint,
  WrongSolver,
  ParameterTooLarge,
  Structural,
  NoTractableAlgorithm,
  Parse,
};

const char* errc_name(Errc code);

/// Every library failure other than plain infeasibility. Infeasibility is a
/// result status, never an exception.
class SolverError : public std::runtime_error {
 public:
  SolverError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "INVALID_INPUT";
    case Errc::ConservativenessViolation: return "CONSERVATIVENESS_VIOLATION";
    case Errc::ConstraintCoverage: return "CONSTRAINT_COVERAGE_ERROR";
    case Errc::InvalidEndpoint: return "INVALID_ENDPOINT";
    case Errc::WrongSolver: return "WRONG_SOLVER";
    case Errc::ParameterTooLarge: return "PARAMETER_TOO_LARGE";
    case Errc::Structural: return "STRUCTURAL_ERROR";
    case Errc::NoTractableAlgorithm: return "NO_TRACTABLE_ALGORITHM";
    case Errc::Parse: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace oddpath
