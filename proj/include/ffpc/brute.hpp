#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffpc/field.hpp"

namespace ffpc {

struct Monomial {
  FqElem coeff;
  std::vector<std::uint32_t> exponents;
};

/// A homogeneous polynomial over one field, stored as a list of monomials.
class HomogeneousPolynomial {
 public:
  /// Throws BadParams (no variables, wrong exponent count), NotHomogeneous.
  HomogeneousPolynomial(FieldPtr field, std::size_t nvars, std::vector<Monomial> monomials);

  const FqField& field() const { return *field_; }
  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  FqElem evaluate(std::span<const FqElem> x) const;

 private:
  FieldPtr field_;
  std::size_t nvars_;
  std::uint32_t degree_ = 0;
  std::vector<Monomial> monomials_;
};

/// x_1^d + ... + x_n^d - d lambda x_1^{h_1} ... x_n^{h_n}.
HomogeneousPolynomial diagonal_polynomial(FieldPtr field, std::uint32_t d, std::span<const std::uint32_t> h,
                                          FqElem lambda);
/// x_1^d + ... + x_d^d - d lambda x_1 ... x_d.
HomogeneousPolynomial dwork_polynomial(FieldPtr field, std::uint32_t d, FqElem lambda);

/// (q^n - 1)/(q - 1), the number of points of P^{n-1}(F_q).
std::uint64_t projective_size(std::uint32_t q, std::size_t nvars);

inline constexpr double kBruteBudget = 1e9;

/// Number of zeros of poly in P^{n-1}(F_q), by enumerating the representatives whose
/// first nonzero coordinate is 1. threads = 0 picks the hardware concurrency.
/// Throws BudgetExceeded when P^{n-1}(F_q) has more than budget points.
std::uint64_t brute_count(const HomogeneousPolynomial& poly, double budget = kBruteBudget,
                          unsigned threads = 0);

/// Same enumeration with the predicate replaced by "true"; equals projective_size.
std::uint64_t brute_visit_count(FieldPtr field, std::size_t nvars, unsigned threads = 1);

}  // namespace ffpc
