#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ffpc/characters.hpp"
#include "ffpc/diagonal.hpp"

namespace ffpc {

/// Dwork hypersurface x_1^d + ... + x_d^d = d lambda x_1 ... x_d over F_q.
struct DworkParams {
  const CharContext* ctx = nullptr;
  int degree = 0;
  FqElem lambda;
};

/// Throws BadModulus (q != 1 mod degree), BadLambda (lambda = 0 or lambda^degree = 1).
void validate(const DworkParams& params);

/// The lambda values for which the degree-d fiber is smooth: lambda != 0, lambda^d != 1.
std::vector<FqElem> admissible_lambdas(const FqField& f, int degree);

struct NamedTerm {
  std::string label;
  AlgValue value;
};

/// The fifteen summands of the degree-six closed form (Greene functions, Jacobi sums).
std::vector<NamedTerm> dwork6_greene_terms(const DworkParams& params);
/// The four summands of the degree-four closed form.
std::vector<NamedTerm> dwork4_greene_terms(const DworkParams& params);
/// The six summands of the degree-five closed form.
std::vector<NamedTerm> dwork5_greene_terms(const DworkParams& params);

RoundedCount dwork6_greene_count(const DworkParams& params, double tolerance = kCountTolerance);
RoundedCount dwork4_greene_count(const DworkParams& params, double tolerance = kCountTolerance);
RoundedCount dwork5_greene_count(const DworkParams& params, double tolerance = kCountTolerance);
/// Unrounded sum of the closed-form summands; throws BadDegree outside {4, 5, 6}.
AlgValue dwork_greene_value(const DworkParams& params);
/// Dispatches on params.degree; throws BadDegree outside {4, 5, 6}.
RoundedCount dwork_greene_count(const DworkParams& params, double tolerance = kCountTolerance);

/// Koblitz's count specialised to the Dwork family.
RoundedCount dwork_koblitz_count(const DworkParams& params, double tolerance = kCountTolerance);

/// Per-class closed form for the sextic: for the listed classes of W/~ (d = n = 6,
/// h = (1,...,1)), the sum of their class contributions equals closed_form(params).
/// Two classes appear together only where the closed form exists for their sum alone.
struct SexticClassIdentity {
  std::string label;
  std::vector<std::array<int, 6>> classes;
  std::size_t orbit_size;  // size of each listed class's orbit
  std::function<AlgValue(const DworkParams&)> closed_form;
  bool sign_flipped = false;  // closed_form carries the opposite of the commonly quoted sign
};

const std::vector<SexticClassIdentity>& sextic_class_identities();

}  // namespace ffpc
