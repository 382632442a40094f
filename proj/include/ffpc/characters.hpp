#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ffpc/field.hpp"

namespace ffpc {

/// Numeric carrier for elements of Q(zeta_{lcm(p, q-1)}).
using AlgValue = std::complex<double>;

inline constexpr double kCountTolerance = 1e-3;

struct RoundedCount {
  std::int64_t value = 0;
  double residual = 0.0;  // max(|re - value|, |im|)
};

/// Rounds a quantity that is provably an integer. Throws RoundingFailure when the
/// residual exceeds the tolerance.
RoundedCount round_count(AlgValue v, double tolerance = kCountTolerance);

class CharContext;

/// The multiplicative character omega^k, where omega(g^m) = zeta_{q-1}^m for the field's
/// generator g. Every character, the trivial one included, vanishes at 0.
///
/// Holds a pointer to its CharContext, which must outlive it.
class MultChar {
 public:
  MultChar(const CharContext& ctx, std::int64_t k);

  const CharContext& context() const { return *ctx_; }
  std::uint32_t exponent() const { return k_; }
  bool is_trivial() const { return k_ == 0; }

  MultChar conj() const;
  MultChar pow(std::int64_t n) const;
  /// Pointwise product; throws MixedFields across contexts.
  MultChar operator*(const MultChar& other) const;
  AlgValue operator()(FqElem x) const;

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.ctx_ == b.ctx_ && a.k_ == b.k_;
  }

 private:
  const CharContext* ctx_;
  std::uint32_t k_;
};

/// Character tables over one field: roots of unity zeta_{q-1}^m, the additive character
/// exp(2 pi i tr(x) / p), all q-1 Gauss sums and (for q <= kJacobiTableLimit) all binary
/// Jacobi sums. Everything is computed in the constructor; reads are lock-free.
class CharContext {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 14;
  static constexpr std::uint32_t kJacobiTableLimit = 128;

  /// Throws FieldTooLarge for q > kMaxOrder (the Gauss table is an O(q^2) pass).
  explicit CharContext(FieldPtr field);
  CharContext(const CharContext&) = delete;
  CharContext& operator=(const CharContext&) = delete;

  const FqField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t q() const { return field_->q(); }
  std::uint32_t group_order() const { return field_->group_order(); }

  MultChar omega(std::int64_t k = 1) const { return MultChar(*this, k); }
  MultChar trivial() const { return MultChar(*this, 0); }
  /// omega_beta^power with omega_beta = omega^((q-1)/beta). Throws BadDivisor.
  MultChar omega_beta(std::uint32_t beta, std::int64_t power = 1) const;

  /// zeta_{q-1}^m.
  AlgValue root(std::int64_t m) const { return roots_[reduce(m)]; }
  AlgValue additive(FqElem x) const { return additive_[field_->trace(x)]; }

  std::uint32_t reduce(std::int64_t k) const {
    const std::int64_t n = group_order();
    return static_cast<std::uint32_t>(((k % n) + n) % n);
  }

  /// Cached g(omega^k).
  AlgValue gauss(std::int64_t k) const { return gauss_[reduce(k)]; }
  /// J(omega^a, omega^b): table lookup when cached, direct O(q) sum otherwise.
  AlgValue jacobi2(std::int64_t a, std::int64_t b) const;

 private:
  AlgValue jacobi2_direct(std::uint32_t a, std::uint32_t b) const;

  FieldPtr field_;
  std::vector<AlgValue> roots_;
  std::vector<AlgValue> additive_;  // indexed by trace value
  std::vector<AlgValue> gauss_;
  // (dlog x, dlog(1 - x)) for every x outside {0, 1}
  std::vector<std::uint32_t> log_x_;
  std::vector<std::uint32_t> log_1mx_;
  std::vector<AlgValue> jacobi_;  // (q-1)^2 table or empty
};

AlgValue char_value(const MultChar& chi, FqElem x);
/// Cached Gauss sum.
AlgValue gauss_sum(const MultChar& chi);
/// Gauss sum by fresh summation over F_q, bypassing the cache.
AlgValue gauss_sum_direct(const MultChar& chi);

/// n-ary Jacobi sum, sum over x_1 + ... + x_n = 1 of chi_1(x_1)...chi_n(x_n). n >= 2.
/// Throws BadParams for n < 2, MixedFields across contexts.
AlgValue jacobi(std::span<const MultChar> chars);
AlgValue jacobi(std::initializer_list<MultChar> chars);

/// Greene's binomial (A;B) = B(-1)/q * J(A, conj B).
AlgValue norm_jacobi(const MultChar& a, const MultChar& b);

/// |prod_i g(chi^i psi) + g(psi^m) psi^{-m}(m) prod_i g(chi^i)| with chi = omega_m.
/// Throws BadModulus unless q = 1 mod m.
double check_hasse_davenport(const CharContext& ctx, std::uint32_t m, const MultChar& psi);

/// Residual of g(omega^{6j}) against the sextic product of Gauss sums. Throws BadModulus.
double check_sextic_product(const CharContext& ctx, std::int64_t j);

/// Residual of the twisted Gauss-sum convolution
///   sum_j g(w^{j+a}) g(w^{-j+b}) w^j(-1) w^{6j}(lambda)
///     = (q-1) g(w^{a+b}) w^b(-1) w^{-(a+b)}(1 - lambda^6).
/// a and b must be multiples of t = (q-1)/6 (BadParams); lambda != 0, lambda^6 != 1
/// (BadLambda); q = 1 mod 6 (BadModulus).
double check_turai(const CharContext& ctx, std::int64_t a, std::int64_t b, FqElem lambda);

void require_same_context(const MultChar& a, const MultChar& b);

}  // namespace ffpc
