#pragma once

#include <stdexcept>
#include <string>

namespace kleind {

enum class ErrorCode {
  kDivisionByZero,
  kNonExactDivision,
  kPoleEvaluation,
  kZeroPolynomial,
  kNotInLSharpM,
  kDegreeTooSmall,
  kNonTermination,
  kOracleInconsistent,
  kOddPolynomial,
  kWindowTooSmall,
  kParseError,
  kExpressionParseError,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kleind
