#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "ffpc/error.hpp"

namespace ffpc {

/// Element of F_q in index form: zero, or the exponent k of the fixed generator g.
class FqElem {
 public:
  constexpr FqElem() = default;

  static constexpr FqElem zero() { return FqElem{}; }
  static constexpr FqElem from_exponent(std::uint32_t k) {
    FqElem x;
    x.rep_ = k;
    return x;
  }

  constexpr bool is_zero() const { return rep_ == kZeroRep; }
  /// Exponent of the generator; meaningless for zero.
  constexpr std::uint32_t exponent() const { return rep_; }

  friend constexpr bool operator==(FqElem, FqElem) = default;

 private:
  static constexpr std::uint32_t kZeroRep = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t rep_ = kZeroRep;
};

enum class GeneratorChoice {
  Smallest,        // first primitive element in enumeration order
  SecondSmallest,  // the next one; used to check independence of the generator
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

/// A concrete finite field F_q, q = p^e, with log/antilog, Zech and trace tables.
///
/// Elements travel in index form (FqElem). The "code" of an element is the integer
/// sum c_i p^i of its coefficient vector over the polynomial basis 1, x, ..., x^(e-1);
/// for e = 1 it is the residue itself. Immutable after construction.
class FqField {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  std::uint32_t group_order() const { return q_ - 1; }

  /// Monic modulus, coefficients low degree first (size e + 1). For e = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t generator_code() const { return exp_code_[q_ > 2 ? 1 : 0]; }
  GeneratorChoice generator_choice() const { return choice_; }

  FqElem zero() const { return FqElem::zero(); }
  FqElem one() const { return FqElem::from_exponent(0); }
  FqElem generator() const { return FqElem::from_exponent(q_ > 2 ? 1 : 0); }

  FqElem mul(FqElem a, FqElem b) const {
    if (a.is_zero() || b.is_zero()) return FqElem::zero();
    return FqElem::from_exponent(reduce(std::uint64_t{a.exponent()} + b.exponent()));
  }

  FqElem add(FqElem a, FqElem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint32_t n = q_ - 1;
    const std::uint32_t diff = b.exponent() >= a.exponent() ? b.exponent() - a.exponent()
                                                            : b.exponent() + n - a.exponent();
    const FqElem z = zech_[diff];
    if (z.is_zero()) return FqElem::zero();
    return FqElem::from_exponent(reduce(std::uint64_t{a.exponent()} + z.exponent()));
  }

  FqElem neg(FqElem a) const {
    if (a.is_zero() || p_ == 2) return a;
    return FqElem::from_exponent(reduce(std::uint64_t{a.exponent()} + (q_ - 1) / 2));
  }

  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

  /// Throws ZeroArgument for a = 0.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  /// a^k for any integer k; 0^0 = 1, 0^k = 0 for k > 0, and negative powers of 0 throw.
  FqElem pow(FqElem a, std::int64_t k) const;

  /// Image of the integer n under Z -> F_p -> F_q.
  FqElem from_int(std::int64_t n) const;
  FqElem from_code(std::uint32_t code) const;
  std::uint32_t code(FqElem a) const { return a.is_zero() ? 0 : exp_code_[a.exponent()]; }
  /// Coefficient vector (low degree first, length e); entries are reduced mod p.
  FqElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FqElem a) const;

  /// Discrete log to the fixed generator. Throws ZeroArgument for 0.
  std::uint32_t dlog(FqElem a) const;
  /// Absolute trace F_q -> F_p, returned as a residue in [0, p).
  std::uint32_t trace(FqElem a) const { return trace_[code(a)]; }

  /// All q elements, in code order (0, 1, ..., q-1).
  std::vector<FqElem> elements() const;

  /// Identity of this field object; characters from different objects never mix.
  std::uint64_t id() const { return id_; }

 private:
  friend std::shared_ptr<const FqField> build_field(std::uint32_t, std::uint32_t,
                                                     GeneratorChoice);
  FqField() = default;

  std::uint32_t reduce(std::uint64_t k) const {
    return static_cast<std::uint32_t>(k % (q_ - 1));
  }

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t id_ = 0;
  GeneratorChoice choice_ = GeneratorChoice::Smallest;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_code_;  // exponent -> code
  std::vector<std::uint32_t> log_;       // code -> exponent (code 0 unused)
  std::vector<FqElem> zech_;             // k -> 1 + g^k
  std::vector<std::uint32_t> trace_;     // code -> tr
};

using FieldPtr = std::shared_ptr<const FqField>;

/// Builds F_{p^e}. The modulus is the lexicographically smallest monic irreducible
/// polynomial of degree e (coefficients compared low degree first), and the generator is
/// the first (or second) primitive element when elements are enumerated in that same
/// coefficient-vector lex order. Throws NonPrime, FieldTooLarge, BadParams.
FieldPtr build_field(std::uint32_t p, std::uint32_t e,
                     GeneratorChoice choice = GeneratorChoice::Smallest);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace ffpc
