#include "ffpc/hypergeometric.hpp"

#include <algorithm>
#include <cmath>

namespace ffpc {
namespace {

const CharContext& common_context(const std::vector<MultChar>& upper,
                                  const std::vector<MultChar>& lower) {
  const MultChar& first = upper.empty() ? lower.front() : upper.front();
  for (const auto& c : upper) require_same_context(first, c);
  for (const auto& c : lower) require_same_context(first, c);
  return first.context();
}

}  // namespace

AlgValue greene_F(const GreeneParams& params) {
  const auto& upper = params.upper;
  const auto& lower = params.lower;
  if (lower.empty() || upper.size() != lower.size() + 1) {
    throw Error(ErrorCode::BadParams, "Greene's function needs n+1 upper and n >= 1 lower parameters");
  }
  const CharContext& ctx = common_context(upper, lower);
  const FqField& f = ctx.field();
  const double q = f.q();
  const FqElem x = params.x;
  if (x.is_zero()) return {};

  if (lower.size() == 1) {
    const MultChar& a0 = upper[0];
    const MultChar& a1 = upper[1];
    const MultChar& b1 = lower[0];
    const MultChar middle = a1.conj() * b1;
    const MultChar outer = a0.conj();
    AlgValue acc{};
    for (const FqElem y : f.elements()) {
      if (y.is_zero()) continue;
      acc += a1(y) * middle(f.sub(f.one(), y)) * outer(f.sub(f.one(), f.mul(x, y)));
    }
    return (a1 * b1)(f.neg(f.one())) / q * acc;
  }

  AlgValue acc{};
  for (std::uint32_t c = 0; c < ctx.group_order(); ++c) {
    const MultChar chi = ctx.omega(c);
    AlgValue term = norm_jacobi(upper[0] * chi, chi);
    for (std::size_t i = 0; i < lower.size() && term != AlgValue{}; ++i) {
      term *= norm_jacobi(upper[i + 1] * chi, lower[i] * chi);
    }
    acc += term * chi(x);
  }
  return q / (q - 1.0) * acc;
}

AlgValue mccarthy_F(const McCarthyParams& params) {
  const auto& upper = params.upper;
  const auto& lower = params.lower;
  if (upper.size() != lower.size()) {
    throw Error(ErrorCode::BadParams, "McCarthy's function needs equal-length parameter lists");
  }
  if (upper.empty()) return params.x == FqElem::from_exponent(0) ? AlgValue{-1.0, 0.0} : AlgValue{};
  const CharContext& ctx = common_context(upper, lower);
  const FqField& f = ctx.field();
  if (params.x.is_zero()) return {};

  AlgValue norm{1.0, 0.0};
  for (std::size_t i = 0; i < upper.size(); ++i) {
    norm *= gauss_sum(upper[i]) * gauss_sum(lower[i].conj());
  }
  const FqElem minus_one = f.neg(f.one());
  const auto m = static_cast<std::int64_t>(upper.size());
  AlgValue acc{};
  for (std::uint32_t c = 0; c < ctx.group_order(); ++c) {
    const MultChar chi = ctx.omega(c);
    AlgValue term{1.0, 0.0};
    for (std::size_t i = 0; i < upper.size(); ++i) {
      term *= gauss_sum(upper[i] * chi) * gauss_sum((lower[i] * chi).conj());
    }
    acc += term * chi.pow(m)(minus_one) * chi(params.x);
  }
  return -acc / (norm * static_cast<double>(ctx.group_order()));
}

McCarthyParams reduce_params(const McCarthyParams& params) {
  McCarthyParams out{{}, {}, params.x};
  std::vector<bool> lower_used(params.lower.size(), false);
  std::vector<bool> upper_used(params.upper.size(), false);
  for (std::size_t i = 0; i < params.upper.size(); ++i) {
    for (std::size_t j = 0; j < params.lower.size(); ++j) {
      if (!lower_used[j] && params.lower[j] == params.upper[i]) {
        lower_used[j] = true;
        upper_used[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < params.upper.size(); ++i) {
    if (!upper_used[i]) out.upper.push_back(params.upper[i]);
  }
  for (std::size_t j = 0; j < params.lower.size(); ++j) {
    if (!lower_used[j]) out.lower.push_back(params.lower[j]);
  }
  return out;
}

AlgValue mccarthy_to_greene(const McCarthyParams& params) {
  const auto& upper = params.upper;
  const auto& lower = params.lower;
  if (upper.size() != lower.size() || upper.size() < 2) {
    throw Error(ErrorCode::BadParams, "need (A_0..A_n; eps, B_1..B_n) with n >= 1");
  }
  if (!lower[0].is_trivial()) {
    throw Error(ErrorCode::PreconditionViolated, "first lower parameter must be trivial");
  }
  if (upper[0].is_trivial()) throw Error(ErrorCode::PreconditionViolated, "A_0 is trivial");
  GreeneParams greene{upper, {lower.begin() + 1, lower.end()}, params.x};
  AlgValue factor{1.0, 0.0};
  for (std::size_t i = 1; i < upper.size(); ++i) {
    if (upper[i] == lower[i]) {
      throw Error(ErrorCode::PreconditionViolated, "A_i equals B_i");
    }
    factor /= norm_jacobi(upper[i], lower[i]);
  }
  return factor * greene_F(greene);
}

AlgValue greene_1F0(const CharContext& ctx, std::uint32_t alpha, FqElem x) {
  const MultChar w = ctx.omega_beta(alpha);
  if (x.is_zero()) return {};
  const FqField& f = ctx.field();
  return w.conj()(f.sub(f.one(), x));
}

}  // namespace ffpc
