#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ffpc/characters.hpp"

namespace ffpc {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string note;  // e.g. why a check ran on zero cases
};

/// g(eps) = -1.
CheckResult check_gauss_trivial(const CharContext& ctx);
/// g(chi) g(conj chi) = q chi(-1) for every chi != eps.
CheckResult check_gauss_norm(const CharContext& ctx);
/// Hasse-Davenport for m in {2, 3, 6} dividing q - 1 and every psi.
CheckResult check_hasse_davenport_all(const CharContext& ctx);
/// The sextic Gauss-sum product for every j. Needs q = 1 mod 6.
CheckResult check_sextic_product_all(const CharContext& ctx);
/// The twisted convolution for all a, b in {0, t, ..., 5t} and up to max_lambdas values.
CheckResult check_turai_all(const CharContext& ctx, std::size_t max_lambdas = 3);

/// Class sums of Koblitz's formula against their closed forms, degree six.
CheckResult check_sextic_class_identities(const CharContext& ctx, std::size_t max_lambdas = 4);
/// gamma(s) F(s) against its closed form for each of the 14 kernel orbits.
CheckResult check_kernel_class_identities(const CharContext& ctx, std::size_t max_lambdas = 4);
/// McCarthy's function against the rescaled Greene function on at least min_cases
/// deterministic pseudo-random parameter tuples.
CheckResult check_greene_mccarthy(const CharContext& ctx, std::size_t min_cases = 200);
/// The reduced 1F~1(omega_alpha; eps; x) against Greene's 1F0 for every alpha and x.
CheckResult check_one_f_zero(const CharContext& ctx);

/// Orbit sizes of W/~ for d = n = 6, the Smith form of the reduced exponent matrix, and
/// the kernel size at this q.
CheckResult check_sextic_structure(const CharContext& ctx);
/// Applicability conditions of the kernel route at this q.
CheckResult check_miyatani_preflight(const CharContext& ctx);
/// The five Jacobi sums tabulated over F_13 with generator 2. Zero cases elsewhere.
CheckResult check_f13_jacobi_table(const CharContext& ctx);

struct SuiteOptions {
  std::size_t max_lambdas = 4;
  std::size_t greene_mccarthy_cases = 200;
};

/// Every check above that applies at this q.
std::vector<CheckResult> run_identity_suite(const CharContext& ctx, const SuiteOptions& options = {});

}  // namespace ffpc
