#include "ffpc/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ffpc {
namespace {

void require_degree(const CharContext& ctx, int d) {
  if (d < 1 || ctx.group_order() % static_cast<std::uint32_t>(d) != 0) {
    throw Error(ErrorCode::BadDegree,
                "degree " + std::to_string(d) + " does not divide q - 1 = " +
                    std::to_string(ctx.group_order()));
  }
}

void require_weight(std::span<const int> w, int d) {
  long long sum = 0;
  for (int wi : w) sum += wi;
  if (((sum % d) + d) % d != 0) throw Error(ErrorCode::BadWeight, "weights do not sum to 0 mod d");
}

void check_shape(int d, int n, std::span<const int> h) {
  if (d < 1 || n < 1 || static_cast<int>(h.size()) != n) {
    throw Error(ErrorCode::BadParams, "need d >= 1, n >= 1 and n deformation exponents");
  }
  int sum = 0;
  int g = d;
  for (int hi : h) {
    if (hi < 0) throw Error(ErrorCode::BadParams, "negative deformation exponent");
    sum += hi;
    g = std::gcd(g, hi);
  }
  if (sum != d) throw Error(ErrorCode::BadParams, "deformation exponents must sum to d");
  if (g != 1) throw Error(ErrorCode::BadParams, "gcd(d, h_1, ..., h_n) must be 1");
}

double pow_int(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

void validate(const DiagonalParams& params) {
  if (params.ctx == nullptr) throw Error(ErrorCode::BadParams, "missing character context");
  const CharContext& ctx = *params.ctx;
  require_degree(ctx, params.degree);
  check_shape(params.degree, static_cast<int>(params.h.size()), params.h);
  const FqField& f = ctx.field();
  if (params.lambda.is_zero()) throw Error(ErrorCode::BadLambda, "lambda must be nonzero");
  FqElem hh = f.one();
  for (int hi : params.h) hh = f.mul(hh, f.pow(f.from_int(hi), hi));
  if (!hh.is_zero() && f.mul(f.pow(params.lambda, params.degree), hh) == f.one()) {
    throw Error(ErrorCode::BadLambda, "lambda^d = (prod h_i^h_i)^-1: singular fiber");
  }
}

AlgValue weil_N(const CharContext& ctx, int d, std::span<const int> w) {
  require_degree(ctx, d);
  require_weight(w, d);
  const auto n = static_cast<int>(w.size());
  const std::int64_t t = ctx.group_order() / static_cast<std::uint32_t>(d);
  const auto zeros = std::count_if(w.begin(), w.end(), [d](int wi) { return wi % d == 0; });
  if (zeros == n) {
    const double q = ctx.q();
    return (pow_int(q, n - 1) - 1.0) / (q - 1.0);
  }
  if (zeros != 0) return {};
  AlgValue prod{1.0, 0.0};
  for (int wi : w) prod *= ctx.gauss(static_cast<std::int64_t>(wi) * t);
  return prod / static_cast<double>(ctx.q());
}

std::vector<Weight> weight_space(int d, int n) {
  std::vector<Weight> out;
  Weight w(n, 0);
  // Odometer over the first n-1 coordinates; the last one closes the sum.
  while (true) {
    int partial = 0;
    for (int i = 0; i + 1 < n; ++i) partial += w[i];
    w[n - 1] = ((-partial) % d + d) % d;
    out.push_back(w);
    int i = n - 2;
    while (i >= 0 && ++w[i] == d) w[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t fermat_count(const CharContext& ctx, int d, int n) {
  require_degree(ctx, d);
  AlgValue acc{};
  for (const auto& w : weight_space(d, n)) acc += weil_N(ctx, d, w);
  return round_count(acc).value;
}

std::vector<Weight> class_members(std::span<const int> w, int d, std::span<const int> h) {
  std::set<Weight> seen;
  for (int m = 0; m < d; ++m) {
    Weight v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = ((w[i] + m * h[i]) % d + d) % d;
    seen.insert(std::move(v));
  }
  return {seen.begin(), seen.end()};
}

Weight canonical_class(std::span<const int> w, int d, std::span<const int> h) {
  return class_members(w, d, h).front();
}

std::vector<OrbitClass> enumerate_orbits(int d, int n, std::span<const int> h) {
  check_shape(d, n, h);
  std::set<Weight> classes;
  for (const auto& w : weight_space(d, n)) classes.insert(canonical_class(w, d, h));

  // The permutations fixing h are generated by transpositions of equal-h positions.
  std::vector<std::pair<int, int>> swaps;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (h[i] == h[j]) swaps.emplace_back(i, j);
    }
  }

  std::set<Weight> visited;
  std::vector<OrbitClass> orbits;
  for (const auto& start : classes) {
    if (visited.count(start)) continue;
    OrbitClass orbit;
    std::vector<Weight> stack{start};
    visited.insert(start);
    while (!stack.empty()) {
      Weight c = std::move(stack.back());
      stack.pop_back();
      for (auto [i, j] : swaps) {
        Weight v = c;
        std::swap(v[i], v[j]);
        Weight canon = canonical_class(v, d, h);
        if (visited.insert(canon).second) stack.push_back(std::move(canon));
      }
      orbit.classes.push_back(std::move(c));
    }
    std::sort(orbit.classes.begin(), orbit.classes.end());
    orbit.representative = orbit.classes.front();
    for (const auto& c : orbit.classes) {
      for (auto& m : class_members(c, d, h)) orbit.representative = std::min(orbit.representative, m);
    }
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.representative < b.representative; });
  return orbits;
}

AlgValue class_contribution(const DiagonalParams& params, std::span<const int> w) {
  validate(params);
  const CharContext& ctx = *params.ctx;
  const int d = params.degree;
  if (w.size() != params.h.size()) throw Error(ErrorCode::BadWeight, "weight has wrong length");
  require_weight(w, d);

  AlgValue total{};
  for (const auto& member : class_members(w, d, params.h)) total += weil_N(ctx, d, member);

  const FqField& f = ctx.field();
  const std::int64_t n = ctx.group_order();
  const std::int64_t t = n / d;
  const FqElem d_lambda = f.mul(f.from_int(d), params.lambda);
  AlgValue s{};
  for (std::int64_t j = 0; j < n; ++j) {
    // Only the full product is independent of the lift of w to integers.
    AlgValue prod{1.0, 0.0};
    for (std::size_t i = 0; i < w.size(); ++i) {
      prod *= ctx.gauss(static_cast<std::int64_t>(w[i]) * t + params.h[i] * j);
    }
    s += prod / ctx.gauss(d * j) * ctx.omega(d * j)(d_lambda);
  }
  return total + s / static_cast<double>(n);
}

AlgValue orbit_contribution(const DiagonalParams& params, const OrbitClass& orbit) {
  return class_contribution(params, orbit.representative);
}

double orbit_symmetry_defect(const DiagonalParams& params, const OrbitClass& orbit) {
  const AlgValue ref = orbit_contribution(params, orbit);
  double worst = 0.0;
  for (const auto& c : orbit.classes) {
    worst = std::max(worst, std::abs(class_contribution(params, c) - ref));
  }
  return worst;
}

AlgValue koblitz_value(const DiagonalParams& params) {
  validate(params);
  const int d = params.degree;
  const int n = static_cast<int>(params.h.size());
  std::set<Weight> classes;
  for (const auto& w : weight_space(d, n)) classes.insert(canonical_class(w, d, params.h));
  AlgValue acc{};
  for (const auto& c : classes) acc += class_contribution(params, c);
  return acc;
}

RoundedCount koblitz_count(const DiagonalParams& params, double tolerance) {
  return round_count(koblitz_value(params), tolerance);
}

DiagonalParams dwork_diagonal(const CharContext& ctx, int d, FqElem lambda) {
  return DiagonalParams{&ctx, d, std::vector<int>(static_cast<std::size_t>(std::max(d, 0)), 1), lambda};
}

}  // namespace ffpc
