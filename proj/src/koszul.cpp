#include "sspairs/koszul.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sspairs {

FiniteComplex::FiniteComplex(std::vector<std::size_t> dims, std::vector<RMatrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw std::invalid_argument("complex: no terms");
  if (maps_.size() + 1 != dims_.size())
    throw std::invalid_argument("complex: need exactly one map between consecutive terms");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].rows() != dims_[i + 1] || maps_[i].cols() != dims_[i])
      throw std::invalid_argument("complex: map " + std::to_string(i) + " has the wrong shape");
  }
  for (std::size_t i = 0; i + 1 < maps_.size(); ++i) {
    const RMatrix comp = maps_[i + 1] * maps_[i];
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c)
        if (comp(r, c) != 0) throw std::invalid_argument("complex: d_" + std::to_string(i + 1) + " d_" + std::to_string(i) + " != 0");
  }
}

std::vector<std::size_t> FiniteComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& m : maps_) r.push_back(rank(m));
  return r;
}

bool FiniteComplex::is_exact() const {
  const auto r = ranks();
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const std::size_t in = i > 0 ? r[i - 1] : 0;
    const std::size_t out = i < r.size() ? r[i] : 0;
    if (in + out != dims_[i]) return false;
  }
  return true;
}

FiniteComplex direct_sum(const FiniteComplex& a, const FiniteComplex& b) {
  if (a.dims().size() != b.dims().size()) throw std::invalid_argument("direct_sum: complexes of different lengths");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < a.dims().size(); ++i) dims.push_back(a.dims()[i] + b.dims()[i]);
  std::vector<RMatrix> maps;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const RMatrix& x = a.maps()[i];
    const RMatrix& y = b.maps()[i];
    RMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    maps.push_back(std::move(m));
  }
  return FiniteComplex(std::move(dims), std::move(maps));
}

Rational torsion(const FiniteComplex& c) {
  if (!c.is_exact()) throw std::domain_error("torsion undefined: the complex is not exact");
  const auto r = c.ranks();
  const std::size_t k = c.length();
  // Columns of C_i not used as rows by the incoming map.
  std::vector<std::size_t> cols(c.dims()[0]);
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const RMatrix& d = c.maps()[i];
    const auto rows = independent_rows(d, cols, r[i]);
    if (rows.size() != r[i] || cols.size() != r[i]) throw std::logic_error("torsion: minor selection failed");
    const Rational minor = bareiss_determinant(submatrix(d, rows, cols));
    if ((k - 1 - i) % 2 == 0) out *= minor;
    else out /= minor;
    std::vector<std::size_t> next;
    for (std::size_t j = 0; j < d.rows(); ++j)
      if (!std::binary_search(rows.begin(), rows.end(), j)) next.push_back(j);
    cols = std::move(next);
  }
  return out;
}

RMatrix multiplication_matrix(const BinaryForm& f, int k) {
  const int d = f.degree();
  if (k < 0) return RMatrix(static_cast<std::size_t>(std::max(0, k + d + 1)), 0);
  RMatrix m(static_cast<std::size_t>(k + d + 1), static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= d; ++i) m(static_cast<std::size_t>(i + j), static_cast<std::size_t>(j)) = f.coeffs()[static_cast<std::size_t>(i)];
  return m;
}

FiniteComplex koszul_complex(const BinaryForm& f, const BinaryForm& g, int m) {
  const int d = f.degree();
  if (d < 1 || g.degree() != d) throw std::invalid_argument("koszul_complex: f and g need the same degree d >= 1");
  if (m < 2 * d - 1) throw std::invalid_argument("koszul_complex: twist m must be at least 2d - 1");
  const std::size_t s0 = static_cast<std::size_t>(m - 2 * d + 1);
  const std::size_t s1 = static_cast<std::size_t>(m - d + 1);
  const std::size_t s2 = static_cast<std::size_t>(m + 1);

  const RMatrix fl = multiplication_matrix(f, m - 2 * d), gl = multiplication_matrix(g, m - 2 * d);
  RMatrix d0(2 * s1, s0);
  for (std::size_t r = 0; r < s1; ++r)
    for (std::size_t c = 0; c < s0; ++c) {
      d0(r, c) = -gl(r, c);
      d0(s1 + r, c) = fl(r, c);
    }
  const RMatrix fr = multiplication_matrix(f, m - d), gr = multiplication_matrix(g, m - d);
  RMatrix d1(s2, 2 * s1);
  for (std::size_t r = 0; r < s2; ++r)
    for (std::size_t c = 0; c < s1; ++c) {
      d1(r, c) = fr(r, c);
      d1(r, s1 + c) = gr(r, c);
    }
  return FiniteComplex({s0, 2 * s1, s2}, {d0, d1});
}

Rational koszul_resultant(const BinaryForm& f, const BinaryForm& g, int m) {
  const FiniteComplex c = koszul_complex(f, g, m);
  if (!c.is_exact()) throw std::domain_error("koszul complex is not exact: f and g share a root (resultant zero)");
  return torsion(c);
}

long weighted_euler_degree(const std::vector<long>& h0) {
  long s = 0;
  for (std::size_t j = 0; j < h0.size(); ++j) s += (j % 2 == 1 ? 1 : -1) * static_cast<long>(j) * h0[j];
  return s;
}

long line_h0(long k) { return std::max(k + 1, 0L); }

}  // namespace sspairs
