#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffpc/characters.hpp"

namespace ffpc {

enum class Method { Brute, Koblitz, Greene, Miyatani };
inline constexpr std::array<Method, 4> kAllMethods = {Method::Brute, Method::Koblitz, Method::Greene,
                                                      Method::Miyatani};

std::string_view to_string(Method m);
/// Throws BadParams for unknown names.
Method parse_method(std::string_view name);

enum class MethodStatus {
  Ok,
  Skipped,         // over the enumeration budget
  NotApplicable,   // no formula for this degree
  RoundingFailure, // residual above tolerance
};

std::string_view to_string(MethodStatus s);

struct MethodResult {
  Method method = Method::Brute;
  MethodStatus status = MethodStatus::Ok;
  std::int64_t count = 0;
  double residual = 0.0;
  double ms = 0.0;
};

struct ProjectiveCountReport {
  std::uint32_t q = 0;
  int degree = 0;
  std::vector<std::uint32_t> lambda;  // F_p coefficients, constant term first
  std::vector<MethodResult> results;  // in the order requested

  /// True when every Ok result has the same count and nothing failed to round.
  bool consistent() const;
};

struct CountOptions {
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  double tolerance = kCountTolerance;
  double brute_budget = 2.8e8;
  unsigned threads = 0;
};

/// Counts the degree-d Dwork fiber at lambda by each requested method. Degrees 3..6;
/// the closed form is defined for 4, 5, 6 and the kernel route for 6 only.
/// Throws BadDegree, BadModulus, BadLambda.
ProjectiveCountReport run_count(const CharContext& ctx, int degree, FqElem lambda, const CountOptions& options);

/// One JSON object per report: {"q", "degree", "lambda", "counts", "residuals", "ms"}.
std::string to_json(const ProjectiveCountReport& report);
std::string to_json(const std::vector<ProjectiveCountReport>& reports);

/// CSV with columns q, degree, lambda, count_<m>..., residual_<m>..., ms_<m>... for the
/// given methods.
std::string csv_header(const std::vector<Method>& methods);
std::string csv_row(const ProjectiveCountReport& report, const std::vector<Method>& methods);

/// lambda for e = 1 as "a", otherwise the comma-separated coefficients.
std::string format_lambda(const std::vector<std::uint32_t>& coeffs);

}  // namespace ffpc
