#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffpc/characters.hpp"

namespace ffpc {

/// A weight vector in (Z/d)^n, entries kept in [0, d).
using Weight = std::vector<int>;

/// The deformed diagonal hypersurface x_1^d + ... + x_n^d - d lambda x^h = 0 over F_q.
struct DiagonalParams {
  const CharContext* ctx = nullptr;
  int degree = 0;
  std::vector<int> h;
  FqElem lambda;
};

/// Throws BadDegree (d does not divide q-1), BadParams (sum h != d, gcd(d, h) != 1,
/// negative h), BadLambda (lambda = 0 or lambda^d = (prod h_i^h_i)^{-1}).
void validate(const DiagonalParams& params);

/// Weil's N_q(0, w), t = (q-1)/d. Throws BadDegree, BadWeight.
AlgValue weil_N(const CharContext& ctx, int d, std::span<const int> w);

/// Points of x_1^d + ... + x_n^d = 0 in P^{n-1}(F_q) as sum over W of N_q(0, w).
std::int64_t fermat_count(const CharContext& ctx, int d, int n);

/// All w in (Z/d)^n with sum w_i = 0, in lex order.
std::vector<Weight> weight_space(int d, int n);

/// Distinct members w + m h (m = 0..d-1) of the class [w].
std::vector<Weight> class_members(std::span<const int> w, int d, std::span<const int> h);
/// Lexicographically smallest member of [w].
Weight canonical_class(std::span<const int> w, int d, std::span<const int> h);

/// One orbit of the coordinate permutations fixing h acting on W/~.
struct OrbitClass {
  Weight representative;       // lex-smallest weight vector in any class of the orbit
  std::vector<Weight> classes;  // canonical representatives of the member classes
  std::size_t size() const { return classes.size(); }
};

/// Partition of W/~ into orbits, sorted by representative. Throws BadParams.
std::vector<OrbitClass> enumerate_orbits(int d, int n, std::span<const int> h);

/// sum_{w' in [w]} N_q(0, w') + S_[w], with
/// S_[w] = 1/(q-1) sum_j prod_i g(omega^{w_i t + h_i j}) / g(omega^{dj}) * omega^{dj}(d lambda).
AlgValue class_contribution(const DiagonalParams& params, std::span<const int> w);

/// class_contribution of the orbit's representative.
AlgValue orbit_contribution(const DiagonalParams& params, const OrbitClass& orbit);

/// Largest deviation of class_contribution across the classes of an orbit from the
/// representative's value. Zero up to rounding when the per-class value is S_n-symmetric.
double orbit_symmetry_defect(const DiagonalParams& params, const OrbitClass& orbit);

/// Unrounded right-hand side of Koblitz's formula, summed class by class.
AlgValue koblitz_value(const DiagonalParams& params);
/// Rounded point count. Throws BadLambda, RoundingFailure and the validate() errors.
RoundedCount koblitz_count(const DiagonalParams& params, double tolerance = kCountTolerance);

/// The Dwork family of degree d as a diagonal deformation with h = (1, ..., 1).
DiagonalParams dwork_diagonal(const CharContext& ctx, int d, FqElem lambda);

}  // namespace ffpc
