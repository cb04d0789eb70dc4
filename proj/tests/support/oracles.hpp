#pragma once

// Independent reference computations used by the tests. None of these call
// into the routines they check.

#include "sspairs/rational.hpp"
#include "sspairs/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using sspairs::IVector;
using sspairs::Rational;
using sspairs::RVector;

/// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Determinant by cofactor expansion along the first row (n <= 8).
inline Rational det_cofactor(const std::vector<RVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<RVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      RVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][c] * det_cofactor(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Coefficients (low to high) of lead * prod (z - r).
inline RVector from_roots(const Rational& lead, const RVector& roots) {
  RVector c{lead};
  for (const auto& r : roots) {
    RVector next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

inline Rational eval(const RVector& c, const Rational& x) {
  Rational s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

/// b^m prod P(beta) for Q = b prod (z - beta), deg P = m.
inline Rational product_resultant(const RVector& p, const Rational& b, const RVector& q_roots) {
  Rational out = 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out *= b;
  for (const auto& beta : q_roots) out *= eval(p, beta);
  return out;
}

/// Polynomial product, low to high.
inline RVector multiply(const RVector& a, const RVector& b) {
  RVector c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// h^0(P^1, O(k)).
inline long h0_line(long k) { return k >= 0 ? k + 1 : 0; }

/// lambda dominated by mu: partial sums bounded, totals compared as given.
inline bool dominated(IVector lambda, IVector mu) {
  const std::size_t n = std::max(lambda.size(), mu.size());
  lambda.resize(n, 0);
  mu.resize(n, 0);
  long a = 0, b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a > b) return false;
  }
  return true;
}

/// Random nonzero small rational p/q with |p| <= num, 1 <= q <= den.
inline Rational small_rational(sspairs::Rng& rng, long num, long den) {
  long p = 0;
  while (p == 0) p = rng.uniform_int(-num, num);
  return fraction(p, rng.uniform_int(1, den));
}

/// Random cocharacter with entries in [-k, k], summing to zero, nonzero.
inline IVector random_cocharacter(sspairs::Rng& rng, std::size_t n, long k) {
  while (true) {
    IVector u(n);
    long s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      u[i] = rng.uniform_int(-k, k);
      s += u[i];
    }
    u[n - 1] = -s;
    if (std::any_of(u.begin(), u.end(), [](long x) { return x != 0; })) return u;
  }
}

}  // namespace oracle
