#include "sspairs/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace sspairs {

FeasibilityResult solve_feasibility(const RMatrix& a, const RVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_feasibility: rhs length mismatch");

  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  // Rows 0..m-1 hold the constraints; row m holds reduced costs and -objective.
  RMatrix t(m + 1, width);
  std::vector<int> sign(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign[i] * a(i, j);
    t(i, n + i) = 1;
    t(i, rhs) = sign[i] * b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t(i, rhs);
    t(m, rhs) = -s;
  }

  for (;;) {
    std::size_t q = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (t(m, j) < 0) {
        q = j;
        break;
      }
    }
    if (q == width) break;

    std::size_t p = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, q) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, q);
      if (p == m || ratio < best || (ratio == best && basis[i] < basis[p])) {
        p = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so a leaving row always exists.
    assert(p < m);

    Rational piv = t(p, q);
    for (std::size_t j = 0; j < width; ++j) {
      if (t(p, j) != 0) t(p, j) /= piv;
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == p || t(i, q) == 0) continue;
      Rational f = t(i, q);
      for (std::size_t j = 0; j < width; ++j) {
        if (t(p, j) != 0) t(i, j) -= f * t(p, j);
      }
    }
    basis[p] = q;
  }

  FeasibilityResult result;
  Rational objective = -t(m, rhs);
  if (objective == 0) {
    result.feasible = true;
    result.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.point[basis[i]] = t(i, rhs);
    }
    return result;
  }

  result.feasible = false;
  result.farkas.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = 1 - t(m, n + i);
    result.farkas[i] = -(sign[i] * y);
  }
  return result;
}

}  // namespace sspairs
