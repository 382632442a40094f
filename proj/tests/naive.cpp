#include "naive.hpp"

#include <numbers>

namespace naive {

PrimeField::PrimeField(int p_, int generator_rank) : p(p_), g(0), log(p_, -1) {
  int rank = 0;
  for (int cand = 2; cand < p && g == 0; ++cand) {
    int order = 1;
    for (long long x = cand; x != 1; x = x * cand % p) ++order;
    if (order == p - 1 && rank++ == generator_rank) g = cand;
  }
  long long x = 1;
  for (int k = 0; k < p - 1; ++k) {
    log[x] = k;
    x = x * g % p;
  }
}

int PrimeField::power(long long x, long long k) const {
  long long r = 1;
  x = mod(x);
  for (long long i = 0; i < k; ++i) r = r * x % p;
  return static_cast<int>(r);
}

Complex PrimeField::chi(long long k, int x) const {
  x = mod(x);
  if (x == 0) return 0.0;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k * log[x] % (p - 1)) / (p - 1));
}

Complex PrimeField::gauss(long long k) const {
  Complex s = 0.0;
  for (int x = 0; x < p; ++x) s += chi(k, x) * std::polar(1.0, 2.0 * std::numbers::pi * x / p);
  return s;
}

Complex PrimeField::jacobi(const std::vector<long long>& ks) const {
  const std::size_t n = ks.size();
  std::vector<int> x(n - 1, 0);
  Complex total = 0.0;
  while (true) {
    long long sum = 0;
    Complex term = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      sum += x[i];
      term *= chi(ks[i], x[i]);
    }
    term *= chi(ks[n - 1], mod(1 - sum));
    total += term;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == p) x[i++] = 0;
    if (i == x.size()) break;
  }
  return total;
}

std::uint64_t projective_zeros(int p, int n, const std::function<int(const std::vector<int>&)>& f) {
  std::vector<int> x(n, 0);
  std::uint64_t affine = 0;
  while (true) {
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == p) x[i++] = 0;
    if (i == x.size()) break;
    if (f(x) == 0) ++affine;
  }
  return affine / static_cast<std::uint64_t>(p - 1);
}

std::uint64_t dwork_count(int p, int d, int lambda) {
  PrimeField f(p);
  return projective_zeros(p, d, [&](const std::vector<int>& x) {
    long long s = 0;
    long long prod = 1;
    for (int xi : x) {
      s += f.power(xi, d);
      prod = prod * xi % p;
    }
    return f.mod(s - static_cast<long long>(d) * lambda % p * prod);
  });
}

}  // namespace naive
