#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ffpc/brute.hpp"
#include "ffpc/diagonal.hpp"
#include "ffpc/error.hpp"
#include "helpers.hpp"
#include "naive.hpp"

namespace ffpc {
namespace {

using testing::context;

TEST(Diagonal, WeilNAllZeroWeight) {
  const auto ctx = context(7);
  const std::vector<int> w(6, 0);
  EXPECT_LT(std::abs(weil_N(*ctx, 6, w) - AlgValue(2801.0)), 1e-9);
}

TEST(Diagonal, WeilNNoZeroEntries) {
  const auto ctx = context(13);
  const std::vector<int> w{3, 3, 4, 5, 1, 2};
  EXPECT_LT(std::abs(weil_N(*ctx, 6, w) - AlgValue(169.0)), 1e-8);
}

TEST(Diagonal, WeilNMixedIsZero) {
  const auto ctx = context(13);
  const std::vector<int> w{0, 3, 3, 0, 1, 5};
  EXPECT_EQ(weil_N(*ctx, 6, w), AlgValue(0.0));
}

TEST(Diagonal, WeilNErrors) {
  const auto ctx = context(13);
  const std::vector<int> bad_sum{1, 0, 0};
  EXPECT_THROW(weil_N(*ctx, 3, bad_sum), Error);
  const std::vector<int> w{1, 4};
  EXPECT_THROW(weil_N(*ctx, 5, w), Error);
}

TEST(Diagonal, WeightSpaceSize) {
  EXPECT_EQ(weight_space(6, 6).size(), 7776u);
  EXPECT_EQ(weight_space(3, 3).size(), 9u);
  for (const auto& w : weight_space(4, 3)) EXPECT_EQ(std::accumulate(w.begin(), w.end(), 0) % 4, 0);
}

TEST(Diagonal, FermatCountMatchesEnumeration) {
  for (auto [p, d, n] : {std::tuple{7, 3, 3}, std::tuple{13, 4, 3}, std::tuple{7, 6, 4}, std::tuple{11, 5, 3}}) {
    const auto ctx = context(p);
    const naive::PrimeField nf(p);
    const auto expected = naive::projective_zeros(p, n, [&](const std::vector<int>& x) {
      long long s = 0;
      for (int xi : x) s += nf.power(xi, d);
      return nf.mod(s);
    });
    EXPECT_EQ(fermat_count(*ctx, d, n), static_cast<std::int64_t>(expected)) << p << " " << d << " " << n;
  }
}

TEST(Diagonal, SexticOrbitSizes) {
  const std::vector<int> h(6, 1);
  const auto orbits = enumerate_orbits(6, 6, h);
  ASSERT_EQ(orbits.size(), 14u);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::vector<std::size_t> expected{1, 30, 30, 15, 60, 120, 20, 60, 120, 90, 30, 180, 180, 360};
  std::sort(sizes.begin(), sizes.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(sizes, expected);
  EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), 1296u);
}

TEST(Diagonal, OrbitRepresentativeIsLexSmallest) {
  const std::vector<int> h(6, 1);
  const auto orbits = enumerate_orbits(6, 6, h);
  const Weight target = canonical_class(std::vector<int>{0, 0, 2, 2, 3, 5}, 6, h);
  for (const auto& o : orbits) {
    if (std::find(o.classes.begin(), o.classes.end(), target) != o.classes.end()) {
      EXPECT_EQ(o.representative, (Weight{0, 0, 1, 3, 4, 4}));
      EXPECT_EQ(o.size(), 180u);
    }
  }
}

TEST(Diagonal, ClassMembers) {
  const std::vector<int> h{1, 1, 1};
  const auto members = class_members(std::vector<int>{0, 1, 2}, 3, h);
  EXPECT_EQ(members.size(), 3u);
  EXPECT_EQ(canonical_class(std::vector<int>{2, 0, 1}, 3, h), (Weight{0, 1, 2}));
}

TEST(Diagonal, ClassContributionFixture) {
  const auto ctx = context(13);
  const auto params = dwork_diagonal(*ctx, 6, ctx->field().from_int(2));
  const AlgValue v = class_contribution(params, std::vector<int>{0, 0, 1, 2, 4, 5});
  EXPECT_LT(std::abs(v - AlgValue(-169.0)), 1e-8);
}

TEST(Diagonal, OrbitSymmetry) {
  const auto ctx = context(13);
  const auto params = dwork_diagonal(*ctx, 6, ctx->field().from_int(2));
  for (const auto& o : enumerate_orbits(6, 6, params.h)) {
    if (o.size() > 60) continue;
    EXPECT_LT(orbit_symmetry_defect(params, o), 1e-8);
  }
}

TEST(Diagonal, KoblitzHesseCubicMatchesNaive) {
  for (int p : {7, 13}) {
    const auto ctx = context(p);
    for (int lambda = 1; lambda < p; ++lambda) {
      const FqElem l = ctx->field().from_int(lambda);
      if (ctx->field().pow(l, 3) == ctx->field().one()) continue;
      const auto count = koblitz_count(dwork_diagonal(*ctx, 3, l));
      EXPECT_EQ(count.value, static_cast<std::int64_t>(naive::dwork_count(p, 3, lambda))) << p << " " << lambda;
    }
  }
}

TEST(Diagonal, KoblitzWithUnequalDeformation) {
  // x^4 + y^4 + z^4 - 4 lambda x^2 y z over F_13
  const auto ctx = context(13);
  const FqField& f = ctx->field();
  const std::vector<std::uint32_t> h{2, 1, 1};
  for (int lambda : {2, 5, 6}) {
    const FqElem l = f.from_int(lambda);
    DiagonalParams params{ctx.get(), 4, {2, 1, 1}, l};
    try {
      validate(params);
    } catch (const Error&) {
      continue;
    }
    const auto brute = brute_count(diagonal_polynomial(ctx->field_ptr(), 4, h, l));
    EXPECT_EQ(koblitz_count(params).value, static_cast<std::int64_t>(brute));
  }
}

TEST(Diagonal, ValidateErrors) {
  const auto ctx = context(13);
  const FqField& f = ctx->field();
  auto code_of = [&](DiagonalParams p) {
    try {
      validate(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NonPrime;
  };
  EXPECT_EQ(code_of({ctx.get(), 5, {1, 1, 1, 1, 1}, f.from_int(2)}), ErrorCode::BadDegree);
  EXPECT_EQ(code_of({ctx.get(), 4, {1, 1, 1}, f.from_int(2)}), ErrorCode::BadParams);
  EXPECT_EQ(code_of({ctx.get(), 4, {2, 2, 0}, f.from_int(2)}), ErrorCode::BadParams);
  EXPECT_EQ(code_of({ctx.get(), 6, std::vector<int>(6, 1), f.zero()}), ErrorCode::BadLambda);
  EXPECT_EQ(code_of({ctx.get(), 6, std::vector<int>(6, 1), f.one()}), ErrorCode::BadLambda);
  EXPECT_EQ(code_of({ctx.get(), 6, std::vector<int>(6, 1), f.from_int(2)}), ErrorCode::NonPrime);
}

}  // namespace
}  // namespace ffpc
