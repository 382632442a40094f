#include "ffpc/brute.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>

#include "ffpc/error.hpp"

namespace ffpc {

HomogeneousPolynomial::HomogeneousPolynomial(FieldPtr field, std::size_t nvars, std::vector<Monomial> monomials)
    : field_(std::move(field)), nvars_(nvars) {
  if (!field_ || nvars_ == 0) throw Error(ErrorCode::BadParams, "need a field and at least one variable");
  bool first = true;
  for (auto& m : monomials) {
    if (m.exponents.size() != nvars_) throw Error(ErrorCode::BadParams, "monomial has wrong number of exponents");
    if (m.coeff.is_zero()) continue;
    std::uint32_t deg = 0;
    for (auto e : m.exponents) deg += e;
    if (first) {
      degree_ = deg;
      first = false;
    } else if (deg != degree_) {
      throw Error(ErrorCode::NotHomogeneous, "monomials of degree " + std::to_string(degree_) + " and " +
                                                 std::to_string(deg));
    }
    monomials_.push_back(std::move(m));
  }
}

FqElem HomogeneousPolynomial::evaluate(std::span<const FqElem> x) const {
  if (x.size() != nvars_) throw Error(ErrorCode::BadParams, "point has wrong number of coordinates");
  const FqField& f = *field_;
  FqElem acc = f.zero();
  for (const auto& m : monomials_) {
    FqElem term = m.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m.exponents[i] != 0) term = f.mul(term, f.pow(x[i], m.exponents[i]));
    }
    acc = f.add(acc, term);
  }
  return acc;
}

HomogeneousPolynomial diagonal_polynomial(FieldPtr field, std::uint32_t d, std::span<const std::uint32_t> h,
                                          FqElem lambda) {
  const FqField& f = *field;
  const std::size_t n = h.size();
  std::vector<Monomial> monomials;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m{f.one(), std::vector<std::uint32_t>(n, 0)};
    m.exponents[i] = d;
    monomials.push_back(std::move(m));
  }
  const FqElem c = f.neg(f.mul(f.from_int(d), lambda));
  monomials.push_back(Monomial{c, std::vector<std::uint32_t>(h.begin(), h.end())});
  return HomogeneousPolynomial(std::move(field), n, std::move(monomials));
}

HomogeneousPolynomial dwork_polynomial(FieldPtr field, std::uint32_t d, FqElem lambda) {
  const std::vector<std::uint32_t> h(d, 1);
  return diagonal_polynomial(std::move(field), d, h, lambda);
}

std::uint64_t projective_size(std::uint32_t q, std::size_t nvars) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

namespace {

// The polynomial on one stratum: x_0 = ... = x_{k-1} = 0, x_k = 1, the remaining
// m = n - 1 - k coordinates free.
struct Stratum {
  std::size_t free_vars = 0;
  std::vector<FqElem> coeffs;
  std::vector<std::vector<std::uint32_t>> exponents;  // over the free coordinates
};

Stratum restrict_to_stratum(const HomogeneousPolynomial& poly, std::size_t k) {
  Stratum s;
  s.free_vars = poly.nvars() - 1 - k;
  for (const auto& m : poly.monomials()) {
    bool vanishes = false;
    for (std::size_t i = 0; i < k; ++i) vanishes = vanishes || m.exponents[i] != 0;
    if (vanishes) continue;
    s.coeffs.push_back(m.coeff);
    s.exponents.emplace_back(m.exponents.begin() + static_cast<std::ptrdiff_t>(k + 1), m.exponents.end());
  }
  return s;
}

class StratumCounter {
 public:
  StratumCounter(const FqField& f, const Stratum& s) : f_(f), s_(s), partial_(s.free_vars + 1) {}

  // Zeros with the first free coordinate fixed to `first` (or all zeros when free_vars = 0).
  std::uint64_t count_from(FqElem first) {
    partial_[0] = s_.coeffs;
    if (s_.free_vars == 0) {
      FqElem acc = f_.zero();
      for (auto c : s_.coeffs) acc = f_.add(acc, c);
      return acc.is_zero() ? 1 : 0;
    }
    if (s_.free_vars == 1) return count_last(partial_[0]);
    assign(0, first);
    return descend(1);
  }

 private:
  void assign(std::size_t var, FqElem x) {
    const auto& prev = partial_[var];
    auto& next = partial_[var + 1];
    next.resize(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const std::uint32_t e = s_.exponents[i][var];
      next[i] = e == 0 ? prev[i] : f_.mul(prev[i], f_.pow(x, e));
    }
  }

  std::uint64_t descend(std::size_t var) {
    if (var + 1 == s_.free_vars) return count_last(partial_[var]);
    std::uint64_t total = 0;
    assign(var, f_.zero());
    total += descend(var + 1);
    for (std::uint32_t j = 0; j < f_.group_order(); ++j) {
      assign(var, FqElem::from_exponent(j));
      total += descend(var + 1);
    }
    return total;
  }

  // Zeros of y -> sum_e a_e y^e over y in F_q, the a_e gathered from the partial products.
  std::uint64_t count_last(const std::vector<FqElem>& partial) {
    const std::size_t last = s_.free_vars - 1;
    std::map<std::uint32_t, FqElem> grouped;
    for (std::size_t i = 0; i < partial.size(); ++i) {
      auto [it, inserted] = grouped.try_emplace(s_.exponents[i][last], partial[i]);
      if (!inserted) it->second = f_.add(it->second, partial[i]);
    }
    FqElem at_zero = f_.zero();
    terms_.clear();
    for (auto [e, a] : grouped) {
      if (e == 0) at_zero = a;
      if (!a.is_zero()) terms_.push_back({e % f_.group_order(), a.exponent()});
    }
    std::uint64_t zeros = at_zero.is_zero() ? 1 : 0;
    const std::uint32_t n = f_.group_order();
    for (std::uint32_t j = 0; j < n; ++j) {
      FqElem acc = f_.zero();
      for (auto& t : terms_) {
        acc = f_.add(acc, FqElem::from_exponent(t.current));
        t.current += t.step;
        if (t.current >= n) t.current -= n;
      }
      if (acc.is_zero()) ++zeros;
    }
    return zeros;
  }

  struct Term {
    Term(std::uint32_t s, std::uint32_t c) : step(s), current(c) {}
    std::uint32_t step;
    std::uint32_t current;
  };

  const FqField& f_;
  const Stratum& s_;
  std::vector<std::vector<FqElem>> partial_;
  std::vector<Term> terms_;
};

std::uint64_t enumerate(const HomogeneousPolynomial& poly, unsigned threads) {
  const FqField& f = poly.field();
  std::vector<Stratum> strata;
  for (std::size_t k = 0; k < poly.nvars(); ++k) strata.push_back(restrict_to_stratum(poly, k));

  // Work items: (stratum, value of its first free coordinate); strata with at most one
  // free coordinate are single items.
  struct Item {
    std::size_t stratum;
    FqElem first;
  };
  std::vector<Item> items;
  for (std::size_t k = 0; k < strata.size(); ++k) {
    if (strata[k].free_vars <= 1) {
      items.push_back({k, f.zero()});
      continue;
    }
    for (const FqElem x : f.elements()) items.push_back({k, x});
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(items.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(threads, 0);
  auto worker = [&](unsigned id) {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      StratumCounter counter(f, strata[items[i].stratum]);
      partial[id] += counter.count_from(items[i].first);
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace

std::uint64_t brute_count(const HomogeneousPolynomial& poly, double budget, unsigned threads) {
  const auto points = static_cast<double>(projective_size(poly.field().q(), poly.nvars()));
  if (points > budget) {
    throw Error(ErrorCode::BudgetExceeded, "P^" + std::to_string(poly.nvars() - 1) + " has " +
                                               std::to_string(points) + " points, budget " +
                                               std::to_string(budget));
  }
  return enumerate(poly, threads);
}

std::uint64_t brute_visit_count(FieldPtr field, std::size_t nvars, unsigned threads) {
  return brute_count(HomogeneousPolynomial(std::move(field), nvars, {}), kBruteBudget, threads);
}

}  // namespace ffpc
