#include "ffpc/error.hpp"

namespace ffpc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RoundingFailure: return "RoundingFailure";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ffpc
