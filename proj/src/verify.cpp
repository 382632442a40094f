#include "ffpc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ffpc/diagonal.hpp"
#include "ffpc/dwork.hpp"
#include "ffpc/hypergeometric.hpp"
#include "ffpc/miyatani.hpp"
#include "ffpc/smith.hpp"

namespace ffpc {
namespace {

constexpr int kSextic = 6;

double cube(double q) { return q * q * q; }

void record(CheckResult& r, double residual) {
  ++r.cases;
  r.max_residual = std::max(r.max_residual, residual);
  if (!(residual <= r.tolerance)) r.passed = false;
}

CheckResult start(std::string name, double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  return r;
}

bool sextic_field(const CharContext& ctx) { return ctx.group_order() % kSextic == 0; }

template <class Table>
std::string flipped_labels(const Table& table) {
  std::string out;
  for (const auto& id : table) {
    if (id.sign_flipped) out += (out.empty() ? "" : " ") + id.label;
  }
  return out.empty() ? out : "sign flipped: " + out;
}

std::vector<FqElem> some_lambdas(const CharContext& ctx, int degree, std::size_t limit) {
  auto all = admissible_lambdas(ctx.field(), degree);
  if (all.size() > limit) all.resize(limit);
  return all;
}

}  // namespace

CheckResult check_gauss_trivial(const CharContext& ctx) {
  CheckResult r = start("gauss_trivial", 1e-6 * cube(ctx.q()));
  record(r, std::abs(gauss_sum_direct(ctx.trivial()) + 1.0));
  return r;
}

CheckResult check_gauss_norm(const CharContext& ctx) {
  CheckResult r = start("gauss_norm", 1e-6 * cube(ctx.q()));
  const FqElem minus_one = ctx.field().neg(ctx.field().one());
  for (std::uint32_t k = 1; k < ctx.group_order(); ++k) {
    const MultChar chi = ctx.omega(k);
    const AlgValue lhs = gauss_sum(chi) * gauss_sum(chi.conj());
    record(r, std::abs(lhs - static_cast<double>(ctx.q()) * chi(minus_one)));
  }
  return r;
}

CheckResult check_hasse_davenport_all(const CharContext& ctx) {
  CheckResult r = start("hasse_davenport", 1e-6 * cube(ctx.q()));
  for (std::uint32_t m : {2u, 3u, 6u}) {
    if (ctx.group_order() % m != 0) continue;
    for (std::uint32_t k = 0; k < ctx.group_order(); ++k) record(r, check_hasse_davenport(ctx, m, ctx.omega(k)));
  }
  return r;
}

CheckResult check_sextic_product_all(const CharContext& ctx) {
  CheckResult r = start("sextic_gauss_product", 1e-6 * cube(ctx.q()));
  if (!sextic_field(ctx)) {
    r.note = "q != 1 mod 6";
    return r;
  }
  for (std::uint32_t j = 0; j < ctx.group_order(); ++j) record(r, check_sextic_product(ctx, j));
  return r;
}

CheckResult check_turai_all(const CharContext& ctx, std::size_t max_lambdas) {
  CheckResult r = start("twisted_convolution", 1e-6 * cube(ctx.q()));
  if (!sextic_field(ctx)) {
    r.note = "q != 1 mod 6";
    return r;
  }
  const auto lambdas = some_lambdas(ctx, kSextic, max_lambdas);
  if (lambdas.empty()) r.note = "no lambda with lambda^6 != 1";
  const std::int64_t t = ctx.group_order() / kSextic;
  for (FqElem lambda : lambdas) {
    for (int a = 0; a < kSextic; ++a) {
      for (int b = 0; b < kSextic; ++b) record(r, check_turai(ctx, a * t, b * t, lambda));
    }
  }
  return r;
}

CheckResult check_sextic_class_identities(const CharContext& ctx, std::size_t max_lambdas) {
  CheckResult r = start("sextic_class_closed_forms", 1e-6 * cube(ctx.q()) * ctx.q());
  r.note = flipped_labels(sextic_class_identities());
  if (!sextic_field(ctx)) {
    r.note = "q != 1 mod 6";
    return r;
  }
  const auto lambdas = some_lambdas(ctx, kSextic, max_lambdas);
  if (lambdas.empty()) r.note = "no lambda with lambda^6 != 1";
  for (FqElem lambda : lambdas) {
    const DworkParams params{&ctx, kSextic, lambda};
    const DiagonalParams diag = dwork_diagonal(ctx, kSextic, lambda);
    for (const auto& id : sextic_class_identities()) {
      AlgValue lhs{};
      for (const auto& c : id.classes) lhs += class_contribution(diag, std::vector<int>(c.begin(), c.end()));
      record(r, std::abs(lhs - id.closed_form(params)));
    }
  }
  return r;
}

CheckResult check_kernel_class_identities(const CharContext& ctx, std::size_t max_lambdas) {
  CheckResult r = start("kernel_class_closed_forms", 1e-6 * cube(ctx.q()) * ctx.q());
  r.note = flipped_labels(kernel_class_identities());
  if (!sextic_field(ctx)) {
    r.note = "q != 1 mod 6";
    return r;
  }
  const auto lambdas = some_lambdas(ctx, kSextic, max_lambdas);
  if (lambdas.empty()) r.note = "no lambda with lambda^6 != 1";
  for (FqElem lambda : lambdas) {
    const DworkParams params{&ctx, kSextic, lambda};
    for (const auto& id : kernel_class_identities()) {
      const AlgValue lhs = miyatani_class_term(params, kernel_element(ctx, id.w));
      record(r, std::abs(lhs - id.closed_form(params)));
    }
  }
  return r;
}

CheckResult check_greene_mccarthy(const CharContext& ctx, std::size_t min_cases) {
  CheckResult r = start("greene_mccarthy", 1e-6);
  std::mt19937 rng(20240611u + ctx.q());
  std::uniform_int_distribution<std::uint32_t> exponent(0, ctx.group_order() - 1);
  std::uniform_int_distribution<std::uint32_t> nonzero(0, ctx.group_order() - 1);
  std::uniform_int_distribution<int> order(1, 3);
  while (r.cases < min_cases) {
    const int n = order(rng);
    McCarthyParams p{{}, {ctx.trivial()}, FqElem::from_exponent(nonzero(rng))};
    p.upper.push_back(ctx.omega(exponent(rng)));
    if (p.upper[0].is_trivial()) continue;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      p.upper.push_back(ctx.omega(exponent(rng)));
      p.lower.push_back(ctx.omega(exponent(rng)));
      ok = ok && !(p.upper.back() == p.lower.back());
    }
    if (!ok) continue;
    record(r, std::abs(mccarthy_F(p) - mccarthy_to_greene(p)));
  }
  return r;
}

CheckResult check_one_f_zero(const CharContext& ctx) {
  CheckResult r = start("one_f_zero", 1e-6);
  const std::uint32_t n = ctx.group_order();
  for (std::uint32_t alpha = 2; alpha <= n; ++alpha) {
    if (n % alpha != 0) continue;
    for (const FqElem x : ctx.field().elements()) {
      const AlgValue lhs = mccarthy_F(reduce_params(McCarthyParams{{ctx.omega_beta(alpha)}, {ctx.trivial()}, x}));
      record(r, std::abs(lhs - greene_1F0(ctx, alpha, x)));
    }
  }
  return r;
}

CheckResult check_sextic_structure(const CharContext& ctx) {
  CheckResult r = start("sextic_structure", 0.0);
  const std::vector<int> h(kSextic, 1);
  const auto orbits = enumerate_orbits(kSextic, kSextic, h);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    sizes.push_back(o.size());
    total += o.size();
  }
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::size_t> expected{1, 30, 30, 15, 60, 120, 20, 60, 120, 90, 30, 180, 180, 360};
  std::sort(expected.begin(), expected.end());
  record(r, sizes == expected && total == 1296 ? 0.0 : 1.0);

  for (const auto& id : sextic_class_identities()) {
    for (const auto& c : id.classes) {
      const Weight canon = canonical_class(std::vector<int>(c.begin(), c.end()), kSextic, h);
      std::size_t size = 0;
      for (const auto& o : orbits) {
        if (std::find(o.classes.begin(), o.classes.end(), canon) != o.classes.end()) size = o.size();
      }
      record(r, size == id.orbit_size ? 0.0 : 1.0);
    }
  }

  const std::vector<std::int64_t> snf_expected{1, 6, 6, 6, 6, 0};
  record(r, smith_normal_form(dwork6_reduced_exponent_matrix()) == snf_expected ? 0.0 : 1.0);
  if (sextic_field(ctx)) {
    auto kernel = enumerate_kernel(ctx);
    const std::size_t size = kernel.size();
    std::sort(kernel.begin(), kernel.end());
    const bool distinct = std::adjacent_find(kernel.begin(), kernel.end()) == kernel.end();
    record(r, size == 1296 && distinct ? 0.0 : 1.0);
  } else {
    r.note = "kernel size not checked: q != 1 mod 6";
  }
  return r;
}

CheckResult check_miyatani_preflight(const CharContext& ctx) {
  CheckResult r = start("kernel_route_preflight", 0.0);
  const MiyataniPreflight pre = miyatani_preflight(ctx);
  if (!pre.divisibility) {
    r.note = "q != 1 mod 6";
    return r;
  }
  record(r, pre.ok() && pre.D == 0 && pre.kernel_size == 1296 ? 0.0 : 1.0);
  return r;
}

CheckResult check_f13_jacobi_table(const CharContext& ctx) {
  CheckResult r = start("f13_jacobi_table", 1e-9);
  const FqField& f = ctx.field();
  if (f.q() != 13 || f.code(f.generator()) != 2) {
    r.note = "only over F_13 with generator 2";
    return r;
  }
  const AlgValue z2 = std::polar(1.0, 2.0 * std::numbers::pi / 6.0);  // zeta_12^2
  auto w = [&](int k) { return ctx.omega(2 * k); };                     // omega^{k t}, t = 2
  record(r, std::abs(jacobi({w(3), w(4), w(5)}) - (4.0 * z2 - 1.0)));
  record(r, std::abs(jacobi({w(1), w(2), w(3)}) - (-4.0 * z2 + 3.0)));
  record(r, std::abs(jacobi({w(1), w(1), w(4)}) - (z2 - 4.0)));
  record(r, std::abs(jacobi({w(2), w(2), w(2)}) - (3.0 * z2 + 1.0)));
  record(r, std::abs(jacobi({w(1), w(1)}) - (-z2 + 4.0)));
  return r;
}

std::vector<CheckResult> run_identity_suite(const CharContext& ctx, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_gauss_trivial(ctx));
  out.push_back(check_gauss_norm(ctx));
  out.push_back(check_hasse_davenport_all(ctx));
  out.push_back(check_sextic_product_all(ctx));
  out.push_back(check_turai_all(ctx, options.max_lambdas));
  out.push_back(check_sextic_class_identities(ctx, options.max_lambdas));
  out.push_back(check_kernel_class_identities(ctx, options.max_lambdas));
  out.push_back(check_greene_mccarthy(ctx, options.greene_mccarthy_cases));
  out.push_back(check_one_f_zero(ctx));
  out.push_back(check_sextic_structure(ctx));
  out.push_back(check_miyatani_preflight(ctx));
  out.push_back(check_f13_jacobi_table(ctx));
  return out;
}

}  // namespace ffpc
