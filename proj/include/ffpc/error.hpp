#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffpc {

enum class ErrorCode {
  NonPrime,
  FieldTooLarge,
  ZeroArgument,
  MixedFields,
  BadModulus,
  BadParams,
  BadLambda,
  BadDegree,
  BadWeight,
  BadDivisor,
  PreconditionViolated,
  RoundingFailure,
  BudgetExceeded,
  NotHomogeneous,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ffpc
