#include <gtest/gtest.h>

#include <set>

#include "ffpc/error.hpp"
#include "ffpc/field.hpp"

namespace ffpc {
namespace {

TEST(Field, F13GeneratorIsTwo) {
  const auto f = build_field(13, 1);
  EXPECT_EQ(f->q(), 13u);
  EXPECT_EQ(f->code(f->generator()), 2u);
}

TEST(Field, AlternateGeneratorIsNextPrimitiveElement) {
  const auto f = build_field(13, 1, GeneratorChoice::SecondSmallest);
  EXPECT_EQ(f->code(f->generator()), 6u);
}

TEST(Field, PrimeFieldTraceIsIdentity) {
  const auto f = build_field(7, 1);
  for (const FqElem x : f->elements()) EXPECT_EQ(f->trace(x), f->code(x));
}

TEST(Field, F25ModulusIsSmallestIrreducible) {
  const auto f = build_field(5, 2);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

class FieldProperties : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldProperties, GeneratorHasFullOrder) {
  const auto [p, e] = GetParam();
  const auto f = build_field(p, e);
  FqElem x = f->generator();
  std::uint32_t order = 1;
  while (x != f->one()) {
    x = f->mul(x, f->generator());
    ++order;
  }
  EXPECT_EQ(order, f->q() - 1);
}

TEST_P(FieldProperties, DlogIsABijection) {
  const auto [p, e] = GetParam();
  const auto f = build_field(p, e);
  std::set<std::uint32_t> seen;
  for (const FqElem x : f->elements()) {
    if (x.is_zero()) continue;
    const std::uint32_t k = f->dlog(x);
    EXPECT_EQ(f->pow(f->generator(), k), x);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), f->q() - 1);
  EXPECT_EQ(f->dlog(f->one()), 0u);
  if (f->q() > 2) EXPECT_EQ(f->dlog(f->generator()), 1u);
}

TEST_P(FieldProperties, AdditionMatchesCoefficientArithmetic) {
  const auto [p, e] = GetParam();
  const auto f = build_field(p, e);
  for (const FqElem a : f->elements()) {
    for (const FqElem b : f->elements()) {
      const auto ca = f->coeffs(a);
      const auto cb = f->coeffs(b);
      std::vector<std::int64_t> sum(e);
      for (std::uint32_t i = 0; i < e; ++i) sum[i] = ca[i] + cb[i];
      ASSERT_EQ(f->add(a, b), f->from_coeffs(sum));
    }
  }
}

TEST_P(FieldProperties, TraceIsLinearAndFrobeniusInvariant) {
  const auto [p, e] = GetParam();
  const auto f = build_field(p, e);
  for (const FqElem a : f->elements()) {
    EXPECT_EQ(f->trace(f->pow(a, p)), f->trace(a));
    for (const FqElem b : f->elements()) {
      ASSERT_EQ(f->trace(f->add(a, b)), (f->trace(a) + f->trace(b)) % p);
    }
  }
}

TEST_P(FieldProperties, InverseAndDistributivity) {
  const auto [p, e] = GetParam();
  const auto f = build_field(p, e);
  const auto elems = f->elements();
  for (const FqElem a : elems) {
    if (!a.is_zero()) EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
    EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
    for (std::size_t j = 0; j < elems.size(); j += 3) {
      const FqElem b = elems[j];
      const FqElem c = elems[(j * 7 + 1) % elems.size()];
      ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldProperties,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{7u, 1u}, std::pair{13u, 1u},
                                           std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 2u},
                                           std::pair{7u, 2u}, std::pair{3u, 3u}));

TEST(Field, FromIntReducesModP) {
  const auto f = build_field(7, 1);
  EXPECT_EQ(f->from_int(-1), f->neg(f->one()));
  EXPECT_EQ(f->from_int(15), f->from_int(1));
  EXPECT_TRUE(f->from_int(14).is_zero());
}

TEST(Field, Errors) {
  try {
    build_field(12, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrime);
  }
  try {
    build_field(2, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
  const auto f = build_field(7, 1);
  try {
    f->dlog(f->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroArgument);
  }
}

TEST(Field, DistinctFieldsHaveDistinctIds) {
  EXPECT_NE(build_field(7, 1)->id(), build_field(7, 1)->id());
}

}  // namespace
}  // namespace ffpc
