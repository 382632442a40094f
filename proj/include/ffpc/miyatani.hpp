#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ffpc/characters.hpp"
#include "ffpc/dwork.hpp"
#include "ffpc/hypergeometric.hpp"
#include "ffpc/smith.hpp"

namespace ffpc {

/// A class of the kernel of f_{q-1} for the degree-six Dwork family: s_i = w_i t with
/// t = (q-1)/6 and sum s_i = 0 mod q-1, taken modulo shifts by multiples of t(1,...,1).
/// The representative has s[0] = 0.
struct KernelElement {
  std::array<std::uint32_t, 6> s{};

  /// |s| as an integer, not reduced.
  std::int64_t total() const;
  friend bool operator==(const KernelElement&, const KernelElement&) = default;
  friend auto operator<=>(const KernelElement&, const KernelElement&) = default;
};

/// The 6x6 matrix with 5 on the diagonal and -1 elsewhere.
IntMatrix dwork6_reduced_exponent_matrix();

/// All 6^4 kernel classes in lex order. Throws BadModulus unless q = 1 mod 6.
std::vector<KernelElement> enumerate_kernel(const CharContext& ctx);

/// Builds the kernel element t * w after shifting so that the first entry is 0.
/// Throws BadModulus, BadWeight (sum w != 0 mod 6).
KernelElement kernel_element(const CharContext& ctx, const std::array<int, 6>& w);

/// gamma(s) = -prod_i g(omega^{-s_i}).
AlgValue gamma_s(const CharContext& ctx, const KernelElement& s);

/// q^{delta_s - 1} * Red F~(omega^{|s|/6 + i t}, i = 0..5; omega^{s_1}, ..., omega^{s_6}; 1/lambda^6),
/// delta_s = 1 when |s| = 0 mod q-1 and 0 otherwise.
AlgValue miyatani_F_s(const CharContext& ctx, const KernelElement& s, FqElem lambda);

/// The reduced McCarthy parameters evaluated by miyatani_F_s.
McCarthyParams miyatani_params(const CharContext& ctx, const KernelElement& s, FqElem lambda);

/// gamma(s) F(s).
AlgValue miyatani_class_term(const DworkParams& params, const KernelElement& s);

/// (q^5 - 1)/(q - 1) - sum_s gamma(s) F(s), unrounded.
AlgValue miyatani_dwork6_value(const DworkParams& params);
RoundedCount miyatani_dwork6_count(const DworkParams& params, double tolerance = kCountTolerance);

/// Applicability of Miyatani's theorem to the degree-six Dwork family.
struct MiyataniPreflight {
  bool divisibility = false;        // q - 1 divisible by every alpha_i and by alpha
  bool kernel_divisibility = false; // every s_i divisible by alpha_i, every |s| by alpha
  bool elementary_divisors = false; // the minors' elementary divisors all divide q - 1
  std::vector<std::int64_t> reduced_divisors;  // Smith form of the 6x6 reduced exponent matrix
  int D = 0;
  std::size_t kernel_size = 0;
  bool ok() const { return divisibility && kernel_divisibility && elementary_divisors; }
};

MiyataniPreflight miyatani_preflight(const CharContext& ctx);

/// gamma(s) F(s) in closed form for one kernel class, w in units of t.
struct KernelClassIdentity {
  std::string label;
  std::array<int, 6> w;
  std::function<AlgValue(const DworkParams&)> closed_form;
  bool sign_flipped = false;  // closed_form carries the opposite of the commonly quoted sign
};

/// One entry per orbit of kernel classes under coordinate permutations (14 in all).
const std::vector<KernelClassIdentity>& kernel_class_identities();

}  // namespace ffpc
