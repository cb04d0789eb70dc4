#include "sspairs/matrix.hpp"

namespace sspairs {

std::size_t rank(const RMatrix& input) {
  RMatrix m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> independent_rows(const RMatrix& m, const std::vector<std::size_t>& cols,
                                          std::size_t wanted) {
  // Echelon basis of accepted rows, each with its pivot column.
  std::vector<RVector> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.rows() && chosen.size() < wanted; ++i) {
    RVector r(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) r[j] = m(i, cols[j]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (r[pivots[b]] == 0) continue;
      Rational f = r[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * basis[b][j];
    }
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) continue;
    basis.push_back(std::move(r));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

RMatrix submatrix(const RMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  RMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

bool solve_square(const RMatrix& a, const RVector& b, RVector& x) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_square: shape mismatch");
  RMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return false;
    m.swap_rows(c, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n) / m(i, i);
  return true;
}

RVector multiply(const RMatrix& a, const RVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: shape mismatch");
  RVector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace sspairs
