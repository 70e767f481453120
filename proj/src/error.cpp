#include "biparam/error.hpp"

namespace biparam {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NegativeOffDiagonal: return "NegativeOffDiagonal";
    case ErrorCode::PositiveDiagonal: return "PositiveDiagonal";
    case ErrorCode::RowSumNonZero: return "RowSumNonZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonStochasticInput: return "NonStochasticInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedStateCount: return "UnsupportedStateCount";
    case ErrorCode::StateMismatch: return "StateMismatch";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::NonPositiveLimit: return "NonPositiveLimit";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::StepTooCoarse: return "StepTooCoarse";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::SingularRatio: return "SingularRatio";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::MaxTermsExceeded: return "MaxTermsExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NegativeIncrement: return "NegativeIncrement";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularResolvent:
    case ErrorCode::SingularRatio:
    case ErrorCode::EvaluationFailure:
    case ErrorCode::NonConvergence:
    case ErrorCode::MaxTermsExceeded:
    case ErrorCode::OutOfRange:
    case ErrorCode::NegativeIncrement:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, std::string message, std::optional<std::size_t> i,
             std::optional<std::size_t> j, std::optional<double> value)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      i_(i),
      j_(j),
      value_(value) {}

}  // namespace biparam
