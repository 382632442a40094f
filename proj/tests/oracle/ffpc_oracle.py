"""Independent prime-field oracle used to derive frozen expected values for the C++ tests.

Plain Python, no shared code with the library: characters via explicit discrete logs of
the smallest primitive root, Gauss/Jacobi sums by direct summation, point counts by
enumeration of normalized projective coordinates.
"""
import cmath
import itertools
import math


class PrimeField:
    def __init__(self, p, gen_rank=0):
        self.p = p
        prims = [g for g in range(2, p) if self._order(g) == p - 1] if p > 2 else [1]
        self.g = prims[gen_rank]
        self.log = {}
        x = 1
        for k in range(p - 1):
            self.log[x] = k
            x = x * self.g % p

    def _order(self, g):
        x, k = g, 1
        while x != 1:
            x = x * g % self.p
            k += 1
        return k

    def chi(self, k, x):
        x %= self.p
        if x == 0:
            return 0
        return cmath.exp(2j * math.pi * (k * self.log[x] % (self.p - 1)) / (self.p - 1))

    def gauss(self, k):
        return sum(self.chi(k, x) * cmath.exp(2j * math.pi * x / self.p) for x in range(self.p))

    def jacobi(self, ks):
        p = self.p
        total = 0
        for xs in itertools.product(range(p), repeat=len(ks) - 1):
            last = (1 - sum(xs)) % p
            v = self.chi(ks[-1], last)
            for k, x in zip(ks, xs):
                v *= self.chi(k, x)
            total += v
        return total

    def binom(self, a, b):
        return self.chi(b, -1) / self.p * self.jacobi([a, -b])

    def greene(self, upper, lower, x):
        p, m = self.p, self.p - 1
        if len(upper) == 2:
            a0, a1 = upper
            b1 = lower[0]
            if x % p == 0:
                return 0
            s = sum(self.chi(a1, y) * self.chi(-a1 + b1, 1 - y) * self.chi(-a0, 1 - x * y) for y in range(p))
            return self.chi(a1 + b1, -1) / p * s
        total = 0
        for c in range(m):
            v = self.binom(upper[0] + c, c)
            for a, b in zip(upper[1:], lower):
                v *= self.binom(a + c, b + c)
            total += v * self.chi(c, x)
        return p / m * total

    def mccarthy(self, upper, lower, x):
        m = self.p - 1
        G = [self.gauss(k) for k in range(m)]
        total = 0
        for c in range(m):
            v = 1
            for a, b in zip(upper, lower):
                v *= G[(a + c) % m] / G[a % m] * G[(-b - c) % m] / G[(-b) % m]
            total += v * self.chi(c, -1) ** len(upper) * self.chi(c, x)
        return -total / m


def projective_points(p, n):
    for k in range(n):
        for rest in itertools.product(range(p), repeat=n - k - 1):
            yield (0,) * k + (1,) + rest


def brute_count(p, n, f):
    return sum(1 for pt in projective_points(p, n) if f(pt) % p == 0)


def dwork(p, d, lam):
    return brute_count(p, d, lambda x: sum(v ** d for v in x) - d * lam * math.prod(x))
