#include "ffpc/field.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace ffpc {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, over F_p

std::atomic<std::uint64_t> next_field_id{1};

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo the nonzero polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() > dg) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (auto& c : d) {
    c = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// The r-th vector (c0, ..., c_{e-1}) in lexicographic order with c0 most significant.
std::vector<std::uint32_t> lex_vector(std::uint32_t r, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> c(e);
  for (std::size_t i = e; i-- > 0;) {
    c[i] = r % p;
    r /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= deg; ++k) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint32_t r = 0; r < count; ++r) {
      Poly g = digits(r, p, k);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct CodeArith {
  std::uint32_t p;
  std::uint32_t e;
  Poly modulus;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    const auto da = digits(a, p, e);
    const auto db = digits(b, p, e);
    Poly prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < e; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
      }
    }
    Poly r = poly_mod(std::move(prod), modulus, p);
    r.resize(e, 0);
    return undigits(r, p);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t result = 1;
    while (k > 0) {
      if (k & 1) result = mul(result, a);
      a = mul(a, a);
      k >>= 1;
    }
    return result;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return (a + b) % p;
    auto da = digits(a, p, e);
    const auto db = digits(b, p, e);
    for (std::uint32_t i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
    return undigits(da, p);
  }
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldPtr build_field(std::uint32_t p, std::uint32_t e, GeneratorChoice choice) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::BadParams, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^20");
    }
  }

  auto field = std::shared_ptr<FqField>(new FqField());
  FqField& f = *field;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.id_ = next_field_id.fetch_add(1);
  f.choice_ = choice;

  if (e == 1) {
    f.modulus_ = {0, 1};
  } else {
    for (std::uint32_t r = 0; r < f.q_; ++r) {
      Poly cand = lex_vector(r, p, e);
      cand.push_back(1);
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
  }
  const CodeArith arith{p, e, f.modulus_};

  const std::uint32_t n = f.q_ - 1;
  const auto factors = prime_factors(n);
  const auto is_primitive = [&](std::uint32_t a) {
    if (a == 0) return false;
    for (auto r : factors) {
      if (arith.pow(a, n / r) == 1) return false;
    }
    return true;
  };
  const int wanted = choice == GeneratorChoice::Smallest ? 0 : 1;
  int seen = 0;
  std::uint32_t gen = 0;
  for (std::uint32_t r = 0; r < f.q_; ++r) {
    const std::uint32_t code = e == 1 ? r : undigits(lex_vector(r, p, e), p);
    if (is_primitive(code) && seen++ == wanted) {
      gen = code;
      break;
    }
  }
  if (gen == 0) {
    throw Error(ErrorCode::BadParams, "field has no primitive element of the requested rank");
  }

  f.exp_code_.resize(n);
  f.log_.assign(f.q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    f.exp_code_[k] = x;
    f.log_[x] = k;
    x = arith.mul(x, gen);
  }

  f.zech_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t s = arith.add(f.exp_code_[k], 1);
    f.zech_[k] = s == 0 ? FqElem::zero() : FqElem::from_exponent(f.log_[s]);
  }

  // tr(x) = x + x^p + ... + x^(p^(e-1)), summed in index form; the result lies in F_p.
  f.trace_.assign(f.q_, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    FqElem acc = FqElem::zero();
    std::uint64_t exponent = k;
    for (std::uint32_t i = 0; i < e; ++i) {
      acc = f.add(acc, FqElem::from_exponent(static_cast<std::uint32_t>(exponent % n)));
      exponent = exponent * p % n;
    }
    const std::uint32_t c = f.code(acc);
    if (c >= p) throw Error(ErrorCode::BadParams, "trace left the prime field");
    f.trace_[f.exp_code_[k]] = c;
  }
  return field;
}

FqElem FqField::inv(FqElem a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "inverse of zero");
  return FqElem::from_exponent(a.exponent() == 0 ? 0 : q_ - 1 - a.exponent());
}

FqElem FqField::pow(FqElem a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw Error(ErrorCode::ZeroArgument, "negative power of zero");
    return k == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t r = ((k % n) + n) % n;
  return FqElem::from_exponent(
      static_cast<std::uint32_t>(static_cast<std::int64_t>(a.exponent()) * r % n));
}

FqElem FqField::from_int(std::int64_t n) const {
  const std::int64_t pp = p_;
  return from_code(static_cast<std::uint32_t>(((n % pp) + pp) % pp));
}

FqElem FqField::from_code(std::uint32_t code) const {
  if (code >= q_) throw Error(ErrorCode::BadParams, "element code out of range");
  return code == 0 ? FqElem::zero() : FqElem::from_exponent(log_[code]);
}

FqElem FqField::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > e_) throw Error(ErrorCode::BadParams, "too many coefficients");
  const std::int64_t pp = p_;
  std::vector<std::uint32_t> d(e_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    d[i] = static_cast<std::uint32_t>(((coeffs[i] % pp) + pp) % pp);
  }
  return from_code(undigits(d, p_));
}

std::vector<std::uint32_t> FqField::coeffs(FqElem a) const { return digits(code(a), p_, e_); }

std::uint32_t FqField::dlog(FqElem a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
  return a.exponent();
}

std::vector<FqElem> FqField::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.push_back(from_code(c));
  return out;
}

}  // namespace ffpc
