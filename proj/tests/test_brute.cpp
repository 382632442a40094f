#include <gtest/gtest.h>

#include "ffpc/brute.hpp"
#include "ffpc/error.hpp"
#include "naive.hpp"

namespace ffpc {
namespace {

Monomial mono(FqElem c, std::vector<std::uint32_t> e) { return Monomial{c, std::move(e)}; }

TEST(Brute, LineInP1) {
  const auto f = build_field(7, 1);
  const HomogeneousPolynomial poly(f, 2, {mono(f->one(), {1, 0}), mono(f->one(), {0, 1})});
  EXPECT_EQ(brute_count(poly), 1u);
}

TEST(Brute, ConicOverF5) {
  const auto f = build_field(5, 1);
  const HomogeneousPolynomial poly(
      f, 3, {mono(f->one(), {2, 0, 0}), mono(f->one(), {0, 2, 0}), mono(f->one(), {0, 0, 2})});
  EXPECT_EQ(brute_count(poly), 6u);
}

TEST(Brute, VisitsEveryProjectivePointOnce) {
  for (auto [p, e, n] : {std::tuple{2u, 1u, 4u}, std::tuple{7u, 1u, 4u}, std::tuple{5u, 2u, 3u}, std::tuple{13u, 1u, 5u}}) {
    const auto f = build_field(p, e);
    EXPECT_EQ(brute_visit_count(f, n), projective_size(f->q(), n));
    EXPECT_EQ(brute_visit_count(f, n, 3), projective_size(f->q(), n));
  }
  EXPECT_EQ(projective_size(7, 6), 19608u);
  EXPECT_EQ(projective_size(5, 4), 156u);
}

TEST(Brute, DworkMatchesNaiveEnumeration) {
  for (auto [p, d, lambda] : {std::tuple{7, 3, 3}, std::tuple{13, 4, 3}, std::tuple{11, 5, 2}, std::tuple{13, 6, 2},
                              std::tuple{5, 3, 2}, std::tuple{7, 4, 2}}) {
    const auto f = build_field(p, 1);
    const auto poly = dwork_polynomial(f, d, f->from_int(lambda));
    EXPECT_EQ(brute_count(poly), naive::dwork_count(p, d, lambda)) << p << " " << d << " " << lambda;
  }
}

TEST(Brute, GeneralPolynomialMatchesNaive) {
  // 3 x^3 + x y z + 2 y^2 z + z^3 over F_7
  const auto f = build_field(7, 1);
  const HomogeneousPolynomial poly(f, 3,
                                   {mono(f->from_int(3), {3, 0, 0}), mono(f->one(), {1, 1, 1}),
                                    mono(f->from_int(2), {0, 2, 1}), mono(f->one(), {0, 0, 3})});
  const naive::PrimeField nf(7);
  const auto expected = naive::projective_zeros(7, 3, [&](const std::vector<int>& x) {
    return nf.mod(3LL * nf.power(x[0], 3) + 1LL * x[0] * x[1] * x[2] + 2LL * nf.power(x[1], 2) * x[2] +
                  nf.power(x[2], 3));
  });
  EXPECT_EQ(brute_count(poly), expected);
}

TEST(Brute, EvaluateAgreesWithCount) {
  const auto f = build_field(3, 2);
  const auto poly = dwork_polynomial(f, 4, f->from_coeffs(std::vector<std::int64_t>{1, 1}));
  std::uint64_t affine = 0;
  for (const FqElem a : f->elements()) {
    for (const FqElem b : f->elements()) {
      for (const FqElem c : f->elements()) {
        for (const FqElem d : f->elements()) {
          const std::vector<FqElem> x{a, b, c, d};
          if (poly.evaluate(x).is_zero()) ++affine;
        }
      }
    }
  }
  EXPECT_EQ(brute_count(poly), (affine - 1) / (f->q() - 1));
}

TEST(Brute, ThreadCountDoesNotChangeResult) {
  const auto f = build_field(19, 1);
  const auto poly = dwork_polynomial(f, 6, f->from_int(2));
  const auto one = brute_count(poly, kBruteBudget, 1);
  EXPECT_EQ(one, 79200u);
  EXPECT_EQ(brute_count(poly, kBruteBudget, 4), one);
  EXPECT_EQ(brute_count(poly, kBruteBudget, 1), one);
}

TEST(Brute, Errors) {
  const auto f = build_field(7, 1);
  try {
    HomogeneousPolynomial(f, 2, {mono(f->one(), {2, 0}), mono(f->one(), {0, 1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomogeneous);
  }
  EXPECT_THROW(HomogeneousPolynomial(f, 2, {mono(f->one(), {1, 0, 0})}), Error);
}

TEST(Brute, BudgetExceeded) {
  const auto f = build_field(7, 2);
  const auto poly = dwork_polynomial(f, 6, f->generator());
  try {
    (void)brute_count(poly, 1e6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

}  // namespace
}  // namespace ffpc
