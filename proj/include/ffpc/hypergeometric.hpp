#pragma once

#include <cstdint>
#include <vector>

#include "ffpc/characters.hpp"

namespace ffpc {

/// Greene's n+1Fn: upper A_0..A_n, lower B_1..B_n (n >= 1), argument x.
struct GreeneParams {
  std::vector<MultChar> upper;
  std::vector<MultChar> lower;
  FqElem x;
};

/// McCarthy's n+1F~n+1: equal-length upper and lower lists, argument x.
struct McCarthyParams {
  std::vector<MultChar> upper;
  std::vector<MultChar> lower;
  FqElem x;
};

/// n >= 2: q/(q-1) sum_chi (A0 chi; chi) prod_i (Ai chi; Bi chi) chi(x).
/// n == 1: eps(x) A1B1(-1)/q sum_y A1(y) conj(A1)B1(1-y) conj(A0)(1-xy).
/// Throws BadParams (shape), MixedFields.
AlgValue greene_F(const GreeneParams& params);

/// -1/(q-1) sum_chi prod_i g(Ai chi)/g(Ai) * g(conj(Bi chi))/g(conj Bi) * chi(-1)^m chi(x),
/// m = number of upper parameters. Empty lists are allowed (all pairs cancelled).
AlgValue mccarthy_F(const McCarthyParams& params);

/// Removes a maximal multiset matching between the upper and lower lists; the survivors
/// keep their relative order. Idempotent.
McCarthyParams reduce_params(const McCarthyParams& params);

/// Evaluates prod_{i>=1} (A_i;B_i)^{-1} * Greene(A_0..A_n; B_1..B_n; x) for McCarthy
/// parameters (A_0..A_n; eps, B_1..B_n; x). Requires A_0 != eps and A_i != B_i,
/// otherwise PreconditionViolated.
AlgValue mccarthy_to_greene(const McCarthyParams& params);

/// Greene's 1F0(omega_alpha; x) = eps(x) conj(omega_alpha)(1 - x). Throws BadDivisor.
AlgValue greene_1F0(const CharContext& ctx, std::uint32_t alpha, FqElem x);

}  // namespace ffpc
