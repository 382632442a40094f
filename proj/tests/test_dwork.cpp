#include <gtest/gtest.h>

#include "ffpc/brute.hpp"
#include "ffpc/diagonal.hpp"
#include "ffpc/dwork.hpp"
#include "ffpc/error.hpp"
#include "ffpc/hypergeometric.hpp"
#include "helpers.hpp"

namespace ffpc {
namespace {

using testing::context;

TEST(Dwork, SexticFixtures) {
  const auto c13 = context(13);
  EXPECT_EQ(dwork6_greene_count({c13.get(), 6, c13->field().from_int(2)}).value, 9810);
  const auto c19 = context(19);
  EXPECT_EQ(dwork6_greene_count({c19.get(), 6, c19->field().from_int(2)}).value, 79200);
}

TEST(Dwork, QuarticAndQuinticFixtures) {
  const auto c13 = context(13);
  EXPECT_EQ(dwork4_greene_count({c13.get(), 4, c13->field().from_int(3)}).value, 320);
  const auto c17 = context(17);
  EXPECT_EQ(dwork4_greene_count({c17.get(), 4, c17->field().from_int(2)}).value, 408);
  const auto c11 = context(11);
  EXPECT_EQ(dwork5_greene_count({c11.get(), 5, c11->field().from_int(2)}).value, 2550);
  EXPECT_EQ(dwork5_greene_count({c11.get(), 5, c11->field().from_int(6)}).value, 2550);
}

TEST(Dwork, SexticTermList) {
  const auto ctx = context(13);
  const auto terms = dwork6_greene_terms({ctx.get(), 6, ctx->field().from_int(2)});
  EXPECT_EQ(terms.size(), 15u);
  EXPECT_EQ(dwork4_greene_terms({ctx.get(), 4, ctx->field().from_int(3)}).size(), 4u);
}

TEST(Dwork, SexticTermsMatchWorkedExampleCoefficients) {
  // Over F_13 the term -120 q^2 J(w2, w3b, w6b) 2F1(w3b, w6b; eps) has J = 4 zeta^2 - 1.
  const auto ctx = context(13);
  const DworkParams params{ctx.get(), 6, ctx->field().from_int(2)};
  const AlgValue z2 = std::polar(1.0, std::acos(-1.0) / 3.0);
  const FqElem x = ctx->field().inv(ctx->field().pow(params.lambda, 6));
  const AlgValue f21 = greene_F({{ctx->omega(8), ctx->omega(10)}, {ctx->trivial()}, x});
  const AlgValue expected = -120.0 * 169.0 * (4.0 * z2 - 1.0) * f21;
  bool found = false;
  for (const auto& t : dwork6_greene_terms(params)) {
    if (t.label != "-120 q^2 J 2F1(w3b,w6b;e)") continue;
    found = true;
    EXPECT_LT(std::abs(t.value - expected), 1e-7);
  }
  EXPECT_TRUE(found);
}

TEST(Dwork, AllRoutesAgreeWithBruteForce) {
  for (auto [p, e, d] : {std::tuple{13u, 1u, 4}, std::tuple{17u, 1u, 4}, std::tuple{11u, 1u, 5},
                         std::tuple{13u, 1u, 6}, std::tuple{19u, 1u, 6}, std::tuple{5u, 2u, 4}}) {
    const auto ctx = context(p, e);
    for (const FqElem l : admissible_lambdas(ctx->field(), d)) {
      const DworkParams params{ctx.get(), d, l};
      const auto brute = static_cast<std::int64_t>(brute_count(dwork_polynomial(ctx->field_ptr(), d, l)));
      EXPECT_EQ(dwork_greene_count(params).value, brute) << "q " << ctx->q() << " d " << d;
      EXPECT_EQ(dwork_koblitz_count(params).value, brute) << "q " << ctx->q() << " d " << d;
    }
  }
}

TEST(Dwork, AdmissibleLambdas) {
  const auto f7 = build_field(7, 1);
  EXPECT_TRUE(admissible_lambdas(*f7, 6).empty());
  const auto f5 = build_field(5, 1);
  EXPECT_TRUE(admissible_lambdas(*f5, 4).empty());
  const auto f13 = build_field(13, 1);
  EXPECT_EQ(admissible_lambdas(*f13, 6).size(), 6u);
  EXPECT_EQ(admissible_lambdas(*f13, 4).size(), 8u);
}

TEST(Dwork, ValidationErrors) {
  const auto ctx = context(13);
  const FqField& f = ctx->field();
  auto code_of = [](const DworkParams& p) {
    try {
      (void)dwork_greene_count(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NonPrime;
  };
  EXPECT_EQ(code_of({ctx.get(), 6, f.one()}), ErrorCode::BadLambda);
  EXPECT_EQ(code_of({ctx.get(), 6, f.zero()}), ErrorCode::BadLambda);
  EXPECT_EQ(code_of({ctx.get(), 4, f.from_int(5)}), ErrorCode::BadLambda);  // 5^4 = 1 mod 13
  EXPECT_EQ(code_of({ctx.get(), 5, f.from_int(2)}), ErrorCode::BadModulus);
  EXPECT_EQ(code_of({ctx.get(), 3, f.from_int(2)}), ErrorCode::BadDegree);
}

TEST(Dwork, SexticClassClosedForms) {
  for (std::uint32_t p : {13u, 19u}) {
    const auto ctx = context(p);
    for (const FqElem l : admissible_lambdas(ctx->field(), 6)) {
      const DworkParams params{ctx.get(), 6, l};
      const DiagonalParams diag = dwork_diagonal(*ctx, 6, l);
      for (const auto& id : sextic_class_identities()) {
        AlgValue lhs{};
        for (const auto& c : id.classes) lhs += class_contribution(diag, std::vector<int>(c.begin(), c.end()));
        EXPECT_LT(std::abs(lhs - id.closed_form(params)), 1e-6 * p * p * p * p) << id.label;
      }
    }
  }
}

TEST(Dwork, ClassClosedFormsSumWithOrbitSizesToTheCount) {
  const auto ctx = context(19);
  const DworkParams params{ctx.get(), 6, ctx->field().from_int(2)};
  AlgValue total{};
  for (const auto& id : sextic_class_identities()) total += double(id.orbit_size) * id.closed_form(params);
  EXPECT_EQ(round_count(total).value, 79200);
}

TEST(Dwork, FlippedEntryDisagreesWithOppositeSign) {
  const auto ctx = context(13);
  const DworkParams params{ctx.get(), 6, ctx->field().from_int(2)};
  const DiagonalParams diag = dwork_diagonal(*ctx, 6, params.lambda);
  for (const auto& id : sextic_class_identities()) {
    if (!id.sign_flipped) continue;
    EXPECT_EQ(id.label, "[0,0,0,2,2,2]");
    const AlgValue lhs = class_contribution(diag, std::vector<int>(id.classes[0].begin(), id.classes[0].end()));
    EXPECT_GT(std::abs(lhs + id.closed_form(params)), 1.0);
  }
}

TEST(Dwork, GeneratorIndependence) {
  for (std::uint32_t p : {13u, 19u}) {
    const auto a = context(p, 1, GeneratorChoice::Smallest);
    const auto b = context(p, 1, GeneratorChoice::SecondSmallest);
    for (int lambda = 2; lambda < int(p); ++lambda) {
      const FqElem la = a->field().from_int(lambda);
      if (a->field().pow(la, 6) == a->field().one()) continue;
      const FqElem lb = b->field().from_int(lambda);
      EXPECT_EQ(dwork6_greene_count({a.get(), 6, la}).value, dwork6_greene_count({b.get(), 6, lb}).value);
    }
  }
}

}  // namespace
}  // namespace ffpc
