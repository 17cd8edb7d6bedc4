#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigid {

enum class ErrorCode {
  NotPrimePower,
  DivideByZero,
  IndexOutOfRange,
  DimensionMismatch,
  Overflow,
  Singular,
  DegreeOutOfRange,
  DegreeExceedsD,
  BudgetExceeded,
  MismatchedParameters,
  ParseError,
  InvalidParameter,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rigid
