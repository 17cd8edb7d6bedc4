#include "rigid/error.hpp"

namespace rigid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::DegreeExceedsD: return "DegreeExceedsD";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MismatchedParameters: return "MismatchedParameters";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

}  // namespace rigid
