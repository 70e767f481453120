#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace biparam {

enum class ErrorCode {
  // input validation
  NonSquare,
  NonFinite,
  NegativeOffDiagonal,
  PositiveDiagonal,
  RowSumNonZero,
  DimensionMismatch,
  NonStochasticInput,
  InvalidArgument,
  UnsupportedStateCount,
  StateMismatch,
  NotNested,
  NegativeCost,
  NonPositiveLimit,
  OutOfDomain,
  StepTooCoarse,
  BudgetExceeded,
  ConfigError,
  // numerical failures
  SingularResolvent,
  SingularRatio,
  EvaluationFailure,
  NonConvergence,
  MaxTermsExceeded,
  OutOfRange,
  NegativeIncrement,
};

const char* to_string(ErrorCode code) noexcept;

/// True for failures that arise while computing (as opposed to rejecting input).
bool is_numerical(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code plus optional entry indices
/// (row/column, region number) and a numeric detail such as a residual.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::optional<std::size_t> i = std::nullopt,
        std::optional<std::size_t> j = std::nullopt, std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> row() const noexcept { return i_; }
  std::optional<std::size_t> col() const noexcept { return j_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> i_;
  std::optional<std::size_t> j_;
  std::optional<double> value_;
};

}  // namespace biparam
