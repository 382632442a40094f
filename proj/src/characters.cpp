#include "ffpc/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ffpc {
namespace {

AlgValue unit(std::uint64_t m, std::uint64_t n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

void require_modulus(const CharContext& ctx, std::uint32_t m) {
  if (m == 0 || ctx.group_order() % m != 0) {
    throw Error(ErrorCode::BadModulus,
                "q = " + std::to_string(ctx.q()) + " is not 1 mod " + std::to_string(m));
  }
}

}  // namespace

RoundedCount round_count(AlgValue v, double tolerance) {
  RoundedCount out;
  out.value = std::llround(v.real());
  out.residual = std::max(std::abs(v.real() - static_cast<double>(out.value)), std::abs(v.imag()));
  if (!(out.residual <= tolerance)) {
    throw Error(ErrorCode::RoundingFailure,
                "value (" + std::to_string(v.real()) + ", " + std::to_string(v.imag()) +
                    ") is not within " + std::to_string(tolerance) + " of an integer");
  }
  return out;
}

MultChar::MultChar(const CharContext& ctx, std::int64_t k) : ctx_(&ctx), k_(ctx.reduce(k)) {}

MultChar MultChar::conj() const { return MultChar(*ctx_, -static_cast<std::int64_t>(k_)); }

MultChar MultChar::pow(std::int64_t n) const {
  return MultChar(*ctx_, static_cast<std::int64_t>(k_) * ctx_->reduce(n));
}

MultChar MultChar::operator*(const MultChar& other) const {
  require_same_context(*this, other);
  return MultChar(*ctx_, static_cast<std::int64_t>(k_) + other.k_);
}

AlgValue MultChar::operator()(FqElem x) const {
  if (x.is_zero()) return {0.0, 0.0};
  return ctx_->root(static_cast<std::int64_t>(k_) * x.exponent());
}

void require_same_context(const MultChar& a, const MultChar& b) {
  if (&a.context() != &b.context()) {
    throw Error(ErrorCode::MixedFields, "characters belong to different fields");
  }
}

CharContext::CharContext(FieldPtr field) : field_(std::move(field)) {
  const FqField& f = *field_;
  if (f.q() > kMaxOrder) {
    throw Error(ErrorCode::FieldTooLarge, "character tables are limited to q <= 2^14");
  }
  const std::uint32_t n = f.group_order();
  roots_.resize(n);
  for (std::uint32_t m = 0; m < n; ++m) roots_[m] = unit(m, n);
  additive_.resize(f.p());
  for (std::uint32_t a = 0; a < f.p(); ++a) additive_[a] = unit(a, f.p());

  // psi(g^m), then g(omega^k) = sum_m zeta^{km} psi(g^m).
  std::vector<AlgValue> psi(n);
  for (std::uint32_t m = 0; m < n; ++m) psi[m] = additive(FqElem::from_exponent(m));
  gauss_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    AlgValue acc{};
    std::uint64_t idx = 0;
    for (std::uint32_t m = 0; m < n; ++m) {
      acc += roots_[idx] * psi[m];
      idx += k;
      if (idx >= n) idx -= n;
    }
    gauss_[k] = acc;
  }

  for (const FqElem x : f.elements()) {
    const FqElem y = f.sub(f.one(), x);
    if (x.is_zero() || y.is_zero()) continue;
    log_x_.push_back(x.exponent());
    log_1mx_.push_back(y.exponent());
  }
  if (f.q() <= kJacobiTableLimit) {
    jacobi_.resize(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) jacobi_[std::size_t{a} * n + b] = jacobi2_direct(a, b);
    }
  }
}

MultChar CharContext::omega_beta(std::uint32_t beta, std::int64_t power) const {
  if (beta == 0 || group_order() % beta != 0) {
    throw Error(ErrorCode::BadDivisor,
                std::to_string(beta) + " does not divide q - 1 = " + std::to_string(group_order()));
  }
  return MultChar(*this, static_cast<std::int64_t>(group_order() / beta) * power);
}

AlgValue CharContext::jacobi2(std::int64_t a, std::int64_t b) const {
  const std::uint32_t ra = reduce(a);
  const std::uint32_t rb = reduce(b);
  if (!jacobi_.empty()) return jacobi_[std::size_t{ra} * group_order() + rb];
  return jacobi2_direct(ra, rb);
}

AlgValue CharContext::jacobi2_direct(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t n = group_order();
  AlgValue acc{};
  for (std::size_t i = 0; i < log_x_.size(); ++i) {
    acc += roots_[(std::uint64_t{a} * log_x_[i] + std::uint64_t{b} * log_1mx_[i]) % n];
  }
  return acc;
}

AlgValue char_value(const MultChar& chi, FqElem x) { return chi(x); }

AlgValue gauss_sum(const MultChar& chi) { return chi.context().gauss(chi.exponent()); }

AlgValue gauss_sum_direct(const MultChar& chi) {
  const CharContext& ctx = chi.context();
  AlgValue acc{};
  for (const FqElem x : ctx.field().elements()) acc += chi(x) * ctx.additive(x);
  return acc;
}

AlgValue jacobi(std::span<const MultChar> chars) {
  if (chars.size() < 2) throw Error(ErrorCode::BadParams, "Jacobi sum needs at least 2 characters");
  for (const auto& c : chars) require_same_context(chars.front(), c);
  const CharContext& ctx = chars.front().context();
  if (chars.size() == 2) return ctx.jacobi2(chars[0].exponent(), chars[1].exponent());

  // dist[s] = sum over x_1 + ... + x_k = s of chi_1(x_1)...chi_k(x_k), indexed by code.
  const FqField& f = ctx.field();
  const auto elems = f.elements();
  const std::uint32_t q = f.q();
  std::vector<AlgValue> dist(q);
  for (std::uint32_t c = 0; c < q; ++c) dist[c] = chars[0](elems[c]);
  for (std::size_t k = 1; k + 1 < chars.size(); ++k) {
    std::vector<AlgValue> values(q);
    for (std::uint32_t c = 0; c < q; ++c) values[c] = chars[k](elems[c]);
    std::vector<AlgValue> next(q);
    for (std::uint32_t s = 0; s < q; ++s) {
      if (dist[s] == AlgValue{}) continue;
      for (std::uint32_t c = 0; c < q; ++c) {
        if (values[c] == AlgValue{}) continue;
        next[f.code(f.add(elems[s], elems[c]))] += dist[s] * values[c];
      }
    }
    dist = std::move(next);
  }
  AlgValue acc{};
  const MultChar& last = chars.back();
  for (std::uint32_t s = 0; s < q; ++s) acc += dist[s] * last(f.sub(f.one(), elems[s]));
  return acc;
}

AlgValue jacobi(std::initializer_list<MultChar> chars) {
  return jacobi(std::span<const MultChar>(chars.begin(), chars.size()));
}

AlgValue norm_jacobi(const MultChar& a, const MultChar& b) {
  require_same_context(a, b);
  const CharContext& ctx = a.context();
  const FqField& f = ctx.field();
  return b(f.neg(f.one())) / static_cast<double>(f.q()) *
         ctx.jacobi2(a.exponent(), -static_cast<std::int64_t>(b.exponent()));
}

double check_hasse_davenport(const CharContext& ctx, std::uint32_t m, const MultChar& psi) {
  require_modulus(ctx, m);
  if (&psi.context() != &ctx) throw Error(ErrorCode::MixedFields, "psi from another field");
  const MultChar chi = ctx.omega_beta(m);
  AlgValue lhs{1.0, 0.0};
  AlgValue chi_prod{1.0, 0.0};
  for (std::uint32_t i = 0; i < m; ++i) {
    lhs *= gauss_sum(chi.pow(i) * psi);
    chi_prod *= gauss_sum(chi.pow(i));
  }
  const FqElem m_elem = ctx.field().from_int(m);
  const AlgValue rhs = -gauss_sum(psi.pow(m)) * psi.pow(-static_cast<std::int64_t>(m))(m_elem) * chi_prod;
  return std::abs(lhs - rhs);
}

double check_sextic_product(const CharContext& ctx, std::int64_t j) {
  require_modulus(ctx, 6);
  const std::int64_t t = ctx.group_order() / 6;
  AlgValue num{1.0, 0.0};
  for (std::int64_t i = 0; i <= 5; ++i) num *= ctx.gauss(i * t + j);
  AlgValue den = ctx.omega(-6 * j)(ctx.field().from_int(6));
  for (std::int64_t i = 1; i <= 5; ++i) den *= ctx.gauss(i * t);
  return std::abs(ctx.gauss(6 * j) - num / den);
}

double check_turai(const CharContext& ctx, std::int64_t a, std::int64_t b, FqElem lambda) {
  require_modulus(ctx, 6);
  const std::int64_t n = ctx.group_order();
  const std::int64_t t = n / 6;
  if (a % t != 0 || b % t != 0) {
    throw Error(ErrorCode::BadParams, "a and b must be multiples of (q-1)/6");
  }
  const FqField& f = ctx.field();
  const FqElem lambda6 = f.pow(lambda, 6);
  if (lambda.is_zero() || lambda6 == f.one()) {
    throw Error(ErrorCode::BadLambda, "need lambda != 0 and lambda^6 != 1");
  }
  const FqElem minus_one = f.neg(f.one());
  AlgValue lhs{};
  for (std::int64_t j = 0; j < n; ++j) {
    lhs += ctx.gauss(j + a) * ctx.gauss(-j + b) * ctx.omega(j)(minus_one) * ctx.omega(6 * j)(lambda);
  }
  const AlgValue rhs = static_cast<double>(n) * ctx.gauss(a + b) * ctx.omega(b)(minus_one) *
                       ctx.omega(-(a + b))(f.sub(f.one(), lambda6));
  return std::abs(lhs - rhs);
}

}  // namespace ffpc
