#include "ffpc/dwork.hpp"

#include <string>

#include "ffpc/hypergeometric.hpp"

namespace ffpc {
namespace {

double ipow(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// Characters and constants shared by the degree-d closed forms: w_k = omega^{k t},
// t = (q-1)/d, and the argument x = 1/lambda^d.
struct DworkBasis {
  const CharContext& ctx;
  const FqField& f;
  double q;
  std::int64_t t;
  FqElem x;
  FqElem lambda_d;
  FqElem minus_one;

  DworkBasis(const DworkParams& params)
      : ctx(*params.ctx),
        f(params.ctx->field()),
        q(params.ctx->q()),
        t(params.ctx->group_order() / params.degree),
        x(f.inv(f.pow(params.lambda, params.degree))),
        lambda_d(f.pow(params.lambda, params.degree)),
        minus_one(f.neg(f.one())) {}

  MultChar w(std::int64_t k) const { return ctx.omega(k * t); }
  MultChar eps() const { return ctx.trivial(); }

  AlgValue F(std::vector<MultChar> upper, std::vector<MultChar> lower) const {
    return greene_F(GreeneParams{std::move(upper), std::move(lower), x});
  }
};

// Degree six: w6 = w(1), w3 = w(2), w2 = w(3), conj(w3) = w(4), conj(w6) = w(5).
struct Sextic : DworkBasis {
  MultChar w6, w3, w2, w3b, w6b, e;
  AlgValue w6_minus_one;

  explicit Sextic(const DworkParams& params)
      : DworkBasis(params),
        w6(w(1)),
        w3(w(2)),
        w2(w(3)),
        w3b(w(4)),
        w6b(w(5)),
        e(eps()),
        w6_minus_one(w6(minus_one)) {}

  AlgValue J_w2_w3b_w6b() const { return jacobi({w2, w3b, w6b}); }
  AlgValue J_w6_w3_w2() const { return jacobi({w6, w3, w2}); }
};

void require_degree(const DworkParams& params, int degree) {
  if (params.degree != degree) {
    throw Error(ErrorCode::BadDegree, "expected degree " + std::to_string(degree));
  }
}

AlgValue sum_terms(const std::vector<NamedTerm>& terms) {
  AlgValue acc{};
  for (const auto& term : terms) acc += term.value;
  return acc;
}

}  // namespace

void validate(const DworkParams& params) {
  if (params.ctx == nullptr) throw Error(ErrorCode::BadParams, "missing character context");
  const FqField& f = params.ctx->field();
  if (params.degree < 1 || f.group_order() % static_cast<std::uint32_t>(params.degree) != 0) {
    throw Error(ErrorCode::BadModulus, "q = " + std::to_string(f.q()) + " is not 1 mod " +
                                           std::to_string(params.degree));
  }
  if (params.lambda.is_zero() || f.pow(params.lambda, params.degree) == f.one()) {
    throw Error(ErrorCode::BadLambda, "need lambda != 0 and lambda^d != 1");
  }
}

std::vector<FqElem> admissible_lambdas(const FqField& f, int degree) {
  std::vector<FqElem> out;
  for (const FqElem x : f.elements()) {
    if (!x.is_zero() && f.pow(x, degree) != f.one()) out.push_back(x);
  }
  return out;
}

std::vector<NamedTerm> dwork6_greene_terms(const DworkParams& params) {
  require_degree(params, 6);
  validate(params);
  const Sextic s(params);
  const double q = s.q;
  const MultChar &w6 = s.w6, &w3 = s.w3, &w2 = s.w2, &w3b = s.w3b, &w6b = s.w6b, &e = s.e;
  const AlgValue j_a = s.J_w2_w3b_w6b();
  const AlgValue j_b = s.J_w6_w3_w2();

  std::vector<NamedTerm> terms;
  terms.push_back({"(q^5-1)/(q-1)", (ipow(q, 5) - 1.0) / (q - 1.0)});
  terms.push_back({"360 q^2 w2(1-l^6)", 360.0 * q * q * w2(s.f.sub(s.f.one(), s.lambda_d))});
  terms.push_back({"q^4 5F4", ipow(q, 4) * s.F({w6, w3, w2, w3b, w6b}, {e, e, e, e})});
  terms.push_back({"30 q^3 w6(-1) 3F2", 30.0 * ipow(q, 3) * s.w6_minus_one * s.F({w3, w2, w3b}, {e, e})});
  terms.push_back({"30 q^3 3F2", 30.0 * ipow(q, 3) * s.F({w6, w2, w6b}, {e, e})});
  terms.push_back({"-15 q^3 w6(-1) J 4F3",
                   -15.0 * ipow(q, 3) * s.w6_minus_one * j_a * s.F({w6, w6b, w3b, w3}, {e, e, w2})});
  terms.push_back({"-20 q^3 w6(-1) J 4F3",
                   -20.0 * ipow(q, 3) * s.w6_minus_one * j_b * s.F({w6, w2, w3b, w6b}, {e, w3, w3})});
  terms.push_back({"60 q^2 w6(-1) J J 3F2", 60.0 * q * q * s.w6_minus_one * jacobi({w6, w6, w3b}) * j_a *
                                                s.F({w6, w3b, w2}, {e, w6b})});
  terms.push_back({"60 q^2 J J 3F2", 60.0 * q * q * jacobi({w3, w3, w3}) * j_a * s.F({w3, w6b, w2}, {e, w6})});
  terms.push_back({"90 q^3 3F2", 90.0 * ipow(q, 3) * s.F({w2, w3b, w6b}, {w6, w3})});
  terms.push_back({"-30 q^2 J J 3F2",
                   -30.0 * q * q * jacobi({w6, w6}) * j_b * s.F({w6, w2, w6b}, {w3, w3b})});
  terms.push_back({"-120 q^2 J 2F1(w6,w3;e)", -120.0 * q * q * j_b * s.F({w6, w3}, {e})});
  terms.push_back({"-120 q^2 J 2F1(w3b,w6b;e)", -120.0 * q * q * j_a * s.F({w3b, w6b}, {e})});
  terms.push_back({"-180 q^2 J 2F1(w3,w3b;w2)", -180.0 * q * q * j_b * s.F({w3, w3b}, {w2})});
  terms.push_back({"-180 q^2 J 2F1(w3,w6b;w3b)", -180.0 * q * q * j_b * s.F({w3, w6b}, {w3b})});
  return terms;
}

std::vector<NamedTerm> dwork4_greene_terms(const DworkParams& params) {
  require_degree(params, 4);
  validate(params);
  const DworkBasis b(params);
  const double q = b.q;
  const MultChar e = b.eps();
  std::vector<NamedTerm> terms;
  terms.push_back({"(q^3-1)/(q-1)", (ipow(q, 3) - 1.0) / (q - 1.0)});
  terms.push_back({"12 q w^t(-1) w^2t(1-l^4)",
                   12.0 * q * b.w(1)(b.minus_one) * b.w(2)(b.f.sub(b.f.one(), b.lambda_d))});
  terms.push_back({"q^2 3F2", q * q * b.F({b.w(1), b.w(2), b.w(3)}, {e, e})});
  terms.push_back({"3 q^2 (w^3t;w^t) 2F1",
                   3.0 * q * q * norm_jacobi(b.w(3), b.w(1)) * b.F({b.w(3), b.w(1)}, {b.w(2)})});
  return terms;
}

std::vector<NamedTerm> dwork5_greene_terms(const DworkParams& params) {
  require_degree(params, 5);
  validate(params);
  const DworkBasis b(params);
  const double q = b.q;
  const MultChar e = b.eps();
  std::vector<NamedTerm> terms;
  terms.push_back({"(q^4-1)/(q-1)", (ipow(q, 4) - 1.0) / (q - 1.0)});
  terms.push_back({"q^3 4F3", ipow(q, 3) * b.F({b.w(1), b.w(2), b.w(3), b.w(4)}, {e, e, e})});
  terms.push_back({"20 q^2 2F1(w^2t,w^3t;e)", 20.0 * q * q * b.F({b.w(2), b.w(3)}, {e})});
  terms.push_back({"20 q^2 2F1(w^t,w^4t;e)", 20.0 * q * q * b.F({b.w(1), b.w(4)}, {e})});
  terms.push_back({"30 q^2 2F1(w^t,w^3t;w^4t)", 30.0 * q * q * b.F({b.w(1), b.w(3)}, {b.w(4)})});
  terms.push_back({"30 q^2 2F1(w^t,w^2t;w^3t)", 30.0 * q * q * b.F({b.w(1), b.w(2)}, {b.w(3)})});
  return terms;
}

RoundedCount dwork6_greene_count(const DworkParams& params, double tolerance) {
  return round_count(sum_terms(dwork6_greene_terms(params)), tolerance);
}

RoundedCount dwork4_greene_count(const DworkParams& params, double tolerance) {
  return round_count(sum_terms(dwork4_greene_terms(params)), tolerance);
}

RoundedCount dwork5_greene_count(const DworkParams& params, double tolerance) {
  return round_count(sum_terms(dwork5_greene_terms(params)), tolerance);
}

AlgValue dwork_greene_value(const DworkParams& params) {
  switch (params.degree) {
    case 4: return sum_terms(dwork4_greene_terms(params));
    case 5: return sum_terms(dwork5_greene_terms(params));
    case 6: return sum_terms(dwork6_greene_terms(params));
    default:
      throw Error(ErrorCode::BadDegree, "no hypergeometric closed form for degree " +
                                            std::to_string(params.degree));
  }
}

RoundedCount dwork_greene_count(const DworkParams& params, double tolerance) {
  return round_count(dwork_greene_value(params), tolerance);
}

RoundedCount dwork_koblitz_count(const DworkParams& params, double tolerance) {
  validate(params);
  return koblitz_count(dwork_diagonal(*params.ctx, params.degree, params.lambda), tolerance);
}

const std::vector<SexticClassIdentity>& sextic_class_identities() {
  using C = std::array<int, 6>;
  static const std::vector<SexticClassIdentity> table = {
      {"[0,0,0,0,0,0]", {C{0, 0, 0, 0, 0, 0}}, 1,
       [](const DworkParams& p) {
         const Sextic s(p);
         return (ipow(s.q, 5) - 1.0) / (s.q - 1.0) +
                ipow(s.q, 4) * s.F({s.w6, s.w3, s.w2, s.w3b, s.w6b}, {s.e, s.e, s.e, s.e});
       }},
      {"[0,0,0,0,1,5]", {C{0, 0, 0, 0, 1, 5}}, 30,
       [](const DworkParams& p) {
         const Sextic s(p);
         return ipow(s.q, 3) * s.w6_minus_one * s.F({s.w3, s.w2, s.w3b}, {s.e, s.e});
       }},
      {"[0,0,0,0,2,4]", {C{0, 0, 0, 0, 2, 4}}, 30,
       [](const DworkParams& p) {
         const Sextic s(p);
         return ipow(s.q, 3) * s.F({s.w6, s.w2, s.w6b}, {s.e, s.e});
       }},
      {"[0,0,1,1,2,2]", {C{0, 0, 1, 1, 2, 2}}, 90,
       [](const DworkParams& p) {
         const Sextic s(p);
         return ipow(s.q, 3) * s.F({s.w2, s.w3b, s.w6b}, {s.w6, s.w3});
       }},
      {"[0,0,0,0,3,3]", {C{0, 0, 0, 0, 3, 3}}, 15,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -ipow(s.q, 3) * s.w6_minus_one * s.J_w2_w3b_w6b() *
                s.F({s.w6, s.w6b, s.w3b, s.w3}, {s.e, s.e, s.w2});
       }},
      {"[0,0,2,2,4,4]", {C{0, 0, 2, 2, 4, 4}}, 30,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -s.q * s.q * jacobi({s.w6, s.w6}) * s.J_w6_w3_w2() *
                s.F({s.w6, s.w2, s.w6b}, {s.w3, s.w3b});
       }},
      {"[0,0,0,2,2,2]", {C{0, 0, 0, 2, 2, 2}}, 20,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -ipow(s.q, 3) * s.w6_minus_one * s.J_w6_w3_w2() *
                s.F({s.w6, s.w2, s.w3b, s.w6b}, {s.e, s.w3, s.w3});
       },
       true},
      {"[0,0,0,1,1,4]+[0,0,0,2,5,5]", {C{0, 0, 0, 1, 1, 4}, C{0, 0, 0, 2, 5, 5}}, 60,
       [](const DworkParams& p) {
         const Sextic s(p);
         const AlgValue j_a = s.J_w2_w3b_w6b();
         return s.q * s.q * s.w6_minus_one * jacobi({s.w6, s.w6, s.w3b}) * j_a *
                    s.F({s.w6, s.w3b, s.w2}, {s.e, s.w6b}) +
                s.q * s.q * jacobi({s.w3, s.w3, s.w3}) * j_a * s.F({s.w3, s.w6b, s.w2}, {s.e, s.w6});
       }},
      {"[0,0,0,1,2,3]", {C{0, 0, 0, 1, 2, 3}}, 120,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -s.q * s.q * s.J_w6_w3_w2() * s.F({s.w6, s.w3}, {s.e});
       }},
      {"[0,0,0,3,4,5]", {C{0, 0, 0, 3, 4, 5}}, 120,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -s.q * s.q * s.J_w2_w3b_w6b() * s.F({s.w3b, s.w6b}, {s.e});
       }},
      {"[0,0,1,3,3,5]", {C{0, 0, 1, 3, 3, 5}}, 180,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -s.q * s.q * s.J_w6_w3_w2() * s.F({s.w3, s.w3b}, {s.w2});
       }},
      {"[0,0,2,2,3,5]", {C{0, 0, 2, 2, 3, 5}}, 180,
       [](const DworkParams& p) {
         const Sextic s(p);
         return -s.q * s.q * s.J_w6_w3_w2() * s.F({s.w3, s.w6b}, {s.w3b});
       }},
      {"[0,0,1,2,4,5]", {C{0, 0, 1, 2, 4, 5}}, 360,
       [](const DworkParams& p) {
         const Sextic s(p);
         return s.q * s.q * s.w2(s.f.sub(s.f.one(), s.lambda_d));
       }},
  };
  return table;
}

}  // namespace ffpc
