#include "ffpc/miyatani.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ffpc {
namespace {

constexpr int kDegree = 6;

std::int64_t sixth(const CharContext& ctx) {
  if (ctx.group_order() % kDegree != 0) {
    throw Error(ErrorCode::BadModulus, "q = " + std::to_string(ctx.q()) + " is not 1 mod 6");
  }
  return ctx.group_order() / kDegree;
}

void require_sextic(const DworkParams& params) {
  if (params.degree != kDegree) throw Error(ErrorCode::BadDegree, "expected degree 6");
  validate(params);
}

// Exponent matrix of the diagonal part x_1^6 + ... + x_6^6: a_{i,j} = 6 [i = j].
int diagonal_exponent(int i, int j) { return i == j ? kDegree : 0; }

// The (#J + 1) x sigma(J) matrix of condition (3): rows j in J, columns the indices i
// whose exponents vanish outside J, plus a row of ones.
IntMatrix condition3_matrix(const std::vector<int>& subset) {
  std::vector<int> sigma;
  for (int i = 0; i < kDegree; ++i) {
    bool vanishes = true;
    for (int j = 0; j < kDegree; ++j) {
      if (std::find(subset.begin(), subset.end(), j) == subset.end() && diagonal_exponent(i, j) != 0) {
        vanishes = false;
      }
    }
    if (vanishes) sigma.push_back(i);
  }
  IntMatrix m(subset.size() + 1, sigma.size());
  for (std::size_t r = 0; r < subset.size(); ++r) {
    for (std::size_t c = 0; c < sigma.size(); ++c) m(r, c) = diagonal_exponent(subset[r], sigma[c]);
  }
  for (std::size_t c = 0; c < sigma.size(); ++c) m(subset.size(), c) = 1;
  return m;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

struct Sixths {
  const CharContext& ctx;
  double q;
  std::int64_t t;
  FqElem x;
  FqElem minus_one;

  explicit Sixths(const DworkParams& p)
      : ctx(*p.ctx),
        q(p.ctx->q()),
        t(sixth(*p.ctx)),
        x(p.ctx->field().inv(p.ctx->field().pow(p.lambda, kDegree))),
        minus_one(p.ctx->field().neg(p.ctx->field().one())) {}

  MultChar w(std::int64_t k) const { return ctx.omega(k * t); }
  MultChar e() const { return ctx.trivial(); }
  AlgValue F(std::vector<MultChar> upper, std::vector<MultChar> lower) const {
    return mccarthy_F(McCarthyParams{std::move(upper), std::move(lower), x});
  }
};

}  // namespace

std::int64_t KernelElement::total() const {
  std::int64_t sum = 0;
  for (auto v : s) sum += v;
  return sum;
}

IntMatrix dwork6_reduced_exponent_matrix() {
  IntMatrix m(kDegree, kDegree);
  for (int i = 0; i < kDegree; ++i) {
    for (int j = 0; j < kDegree; ++j) m(i, j) = i == j ? kDegree - 1 : -1;
  }
  return m;
}

KernelElement kernel_element(const CharContext& ctx, const std::array<int, 6>& w) {
  const std::int64_t t = sixth(ctx);
  int sum = 0;
  for (int wi : w) sum += wi;
  if (((sum % kDegree) + kDegree) % kDegree != 0) {
    throw Error(ErrorCode::BadWeight, "kernel weights must sum to 0 mod 6");
  }
  KernelElement out;
  for (int i = 0; i < kDegree; ++i) {
    const int shifted = (((w[i] - w[0]) % kDegree) + kDegree) % kDegree;
    out.s[i] = static_cast<std::uint32_t>(shifted * t);
  }
  return out;
}

std::vector<KernelElement> enumerate_kernel(const CharContext& ctx) {
  const std::int64_t t = sixth(ctx);
  std::vector<KernelElement> out;
  std::array<int, 6> w{};
  // Odometer over w_2..w_5; w_6 closes the sum.
  while (true) {
    const int partial = w[1] + w[2] + w[3] + w[4];
    w[5] = (kDegree - partial % kDegree) % kDegree;
    KernelElement k;
    for (int i = 0; i < kDegree; ++i) k.s[i] = static_cast<std::uint32_t>(w[i] * t);
    out.push_back(k);
    int i = 4;
    while (i >= 1 && ++w[i] == kDegree) w[i--] = 0;
    if (i < 1) break;
  }
  return out;
}

AlgValue gamma_s(const CharContext& ctx, const KernelElement& s) {
  AlgValue prod{-1.0, 0.0};
  for (auto si : s.s) prod *= ctx.gauss(-static_cast<std::int64_t>(si));
  return prod;
}

McCarthyParams miyatani_params(const CharContext& ctx, const KernelElement& s, FqElem lambda) {
  const std::int64_t t = sixth(ctx);
  const FqField& f = ctx.field();
  if (lambda.is_zero() || f.pow(lambda, kDegree) == f.one()) {
    throw Error(ErrorCode::BadLambda, "need lambda != 0 and lambda^6 != 1");
  }
  const std::int64_t shift = s.total() / kDegree;
  McCarthyParams p{{}, {}, f.inv(f.pow(lambda, kDegree))};
  for (int i = 0; i < kDegree; ++i) {
    p.upper.push_back(ctx.omega(shift + i * t));
    p.lower.push_back(ctx.omega(s.s[i]));
  }
  return reduce_params(p);
}

AlgValue miyatani_F_s(const CharContext& ctx, const KernelElement& s, FqElem lambda) {
  const McCarthyParams p = miyatani_params(ctx, s, lambda);
  const bool delta = s.total() % ctx.group_order() == 0;
  const AlgValue value = mccarthy_F(p);
  return delta ? value : value / static_cast<double>(ctx.q());
}

AlgValue miyatani_class_term(const DworkParams& params, const KernelElement& s) {
  require_sextic(params);
  return gamma_s(*params.ctx, s) * miyatani_F_s(*params.ctx, s, params.lambda);
}

AlgValue miyatani_dwork6_value(const DworkParams& params) {
  require_sextic(params);
  const CharContext& ctx = *params.ctx;
  const double q = ctx.q();
  AlgValue acc{};
  for (const auto& s : enumerate_kernel(ctx)) {
    acc += gamma_s(ctx, s) * miyatani_F_s(ctx, s, params.lambda);
  }
  return (q * q * q * q * q - 1.0) / (q - 1.0) - acc;
}

RoundedCount miyatani_dwork6_count(const DworkParams& params, double tolerance) {
  return round_count(miyatani_dwork6_value(params), tolerance);
}

MiyataniPreflight miyatani_preflight(const CharContext& ctx) {
  MiyataniPreflight out;
  const std::uint32_t n = ctx.group_order();
  // alpha_i = 1 for every variable, alpha = 6.
  out.divisibility = n % kDegree == 0;
  out.reduced_divisors = smith_normal_form(dwork6_reduced_exponent_matrix());
  if (!out.divisibility) return out;

  const auto kernel = enumerate_kernel(ctx);
  out.kernel_size = kernel.size();
  out.kernel_divisibility = std::all_of(kernel.begin(), kernel.end(), [](const KernelElement& k) {
    return k.total() % kDegree == 0;
  });

  out.elementary_divisors = true;
  for (int size = (kDegree + 1) / 2; size <= kDegree; ++size) {
    for (const auto& subset : subsets_of_size(kDegree, size)) {
      for (std::int64_t d : smith_normal_form(condition3_matrix(subset))) {
        if (d != 0 && n % d != 0) out.elementary_divisors = false;
      }
    }
  }

  // D counts the subsets J with #J = 3 such that every row has a positive exponent outside J.
  out.D = 0;
  for (const auto& subset : subsets_of_size(kDegree, kDegree / 2)) {
    bool all_rows = true;
    for (int i = 0; i < kDegree && all_rows; ++i) {
      bool found = false;
      for (int j = 0; j < kDegree; ++j) {
        if (std::find(subset.begin(), subset.end(), j) == subset.end() && diagonal_exponent(i, j) >= 1) {
          found = true;
        }
      }
      all_rows = found;
    }
    if (all_rows) ++out.D;
  }
  return out;
}

const std::vector<KernelClassIdentity>& kernel_class_identities() {
  using W = std::array<int, 6>;
  static const std::vector<KernelClassIdentity> table = {
      {"(0,0,0,0,0,0)", W{0, 0, 0, 0, 0, 0},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.F({s.w(1), s.w(2), s.w(3), s.w(4), s.w(5)}, {e, e, e, e, e});
       }},
      {"(0,0,0,0,1,5)", W{0, 0, 0, 0, 1, 5},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * s.w(1)(s.minus_one) * s.F({s.w(2), s.w(3), s.w(4)}, {e, e, e});
       }},
      {"(0,0,0,0,2,4)", W{0, 0, 0, 0, 2, 4},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * s.F({s.w(1), s.w(3), s.w(5)}, {e, e, e});
       }},
      {"(0,0,0,0,3,3)", W{0, 0, 0, 0, 3, 3},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * s.w(1)(s.minus_one) * s.F({s.w(1), s.w(2), s.w(4), s.w(5)}, {e, e, e, s.w(3)});
       },
       true},
      {"(0,0,0,1,1,4)", W{0, 0, 0, 1, 1, 4},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * jacobi({s.w(2), s.w(5), s.w(5)}) * s.F({s.w(2), s.w(3), s.w(5)}, {e, e, s.w(1)});
       }},
      {"(0,0,0,2,5,5)", W{0, 0, 0, 2, 5, 5},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * jacobi({s.w(1), s.w(1), s.w(4)}) * s.F({s.w(3), s.w(4), s.w(1)}, {e, e, s.w(5)});
       }},
      {"(0,0,0,2,2,2)", W{0, 0, 0, 2, 2, 2},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * jacobi({s.w(4), s.w(4), s.w(4)}) *
                s.F({s.w(1), s.w(3), s.w(4), s.w(5)}, {e, e, s.w(2), s.w(2)});
       }},
      {"(0,0,0,3,4,5)", W{0, 0, 0, 3, 4, 5},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * jacobi({s.w(1), s.w(2), s.w(3)}) * s.F({s.w(2), s.w(1)}, {e, e});
       }},
      {"(0,0,0,1,2,3)", W{0, 0, 0, 1, 2, 3},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * jacobi({s.w(3), s.w(4), s.w(5)}) * s.F({s.w(4), s.w(5)}, {e, e});
       }},
      {"(0,0,1,1,2,2)", W{0, 0, 1, 1, 2, 2},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return s.q * jacobi({s.w(4), s.w(4), s.w(5), s.w(5)}) *
                s.F({s.w(3), s.w(4), s.w(5)}, {e, s.w(1), s.w(2)});
       },
       true},
      {"(0,0,2,2,4,4)", W{0, 0, 2, 2, 4, 4},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * s.q * s.F({s.w(3), s.w(5), s.w(1)}, {e, s.w(2), s.w(4)});
       }},
      {"(0,0,1,3,4,4)", W{0, 0, 1, 3, 4, 4},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return s.q * jacobi({s.w(2), s.w(2), s.w(3), s.w(5)}) * s.F({s.w(2), s.w(5)}, {e, s.w(4)});
       }},
      {"(0,0,1,3,3,5)", W{0, 0, 1, 3, 3, 5},
       [](const DworkParams& p) {
         const Sixths s(p);
         const MultChar e = s.e();
         return -s.q * s.q * s.F({s.w(2), s.w(4)}, {e, s.w(3)});
       }},
      {"(0,0,1,2,4,5)", W{0, 0, 1, 2, 4, 5},
       [](const DworkParams& p) {
         const Sixths s(p);
         return -s.q * s.q * s.w(1)(s.minus_one) * s.F({s.w(3)}, {s.e()});
       }},
  };
  return table;
}

}  // namespace ffpc
