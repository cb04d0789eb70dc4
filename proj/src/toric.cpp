#include "sspairs/toric.hpp"

#include "sspairs/lp.hpp"
#include "sspairs/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sspairs {

namespace {

std::vector<IVector> as_set(std::vector<IVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long idot(const IVector& u, const IVector& a) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * a[i];
  return s;
}

IVector primitive(IVector u) {
  long g = 0;
  for (long x : u) g = std::gcd(g, x);
  if (g > 1)
    for (long& x : u) x /= g;
  return u;
}

RMatrix rows_matrix(const std::vector<IVector>& rows, std::size_t dim) {
  RMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = rows[i][k];
  return m;
}

// Basis of {u : m u = 0}, scaled to primitive integer vectors.
std::vector<IVector> kernel(RMatrix m) {
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = 0; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = 0; k < cols; ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<IVector> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    RVector u(cols, Rational(0));
    u[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = -m(i, c);
    out.push_back(primitive(clear_denominators(u)));
  }
  return out;
}

std::size_t affine_dimension(const std::vector<IVector>& s) {
  if (s.size() < 2) return 0;
  std::vector<IVector> diffs;
  for (std::size_t i = 1; i < s.size(); ++i) {
    IVector d(s[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = s[i][k] - s[0][k];
    diffs.push_back(std::move(d));
  }
  return rank(rows_matrix(diffs, s.front().size()));
}

std::vector<IVector> argmin_set(const std::vector<IVector>& sorted_pts, const IVector& u) {
  long best = idot(u, sorted_pts.front());
  for (const auto& x : sorted_pts) best = std::min(best, idot(u, x));
  std::vector<IVector> out;
  for (const auto& x : sorted_pts)
    if (idot(u, x) == best) out.push_back(x);
  return out;
}

// Facets within the affine hull, then all their intersections.
std::set<std::vector<IVector>> candidate_faces(const std::vector<IVector>& pts) {
  const std::size_t dim = pts.front().size();
  std::set<std::vector<IVector>> faces{pts};
  const std::size_t k = affine_dimension(pts);
  if (k == 0) return faces;
  std::vector<IVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  const std::vector<IVector> normal_space = kernel(rows_matrix(diffs, dim));

  std::set<std::vector<IVector>> facets;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<IVector> rows = normal_space;
    for (std::size_t i = 1; i < k; ++i) {
      IVector d(dim);
      for (std::size_t j = 0; j < dim; ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
      rows.push_back(std::move(d));
    }
    const auto ker = kernel(rows_matrix(rows, dim));
    if (ker.size() == 1) {
      for (long sign : {1L, -1L}) {
        IVector u = ker.front();
        for (long& x : u) x *= sign;
        auto f = argmin_set(pts, u);
        if (affine_dimension(f) + 1 == k) facets.insert(std::move(f));
      }
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pts.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }

  std::vector<std::vector<IVector>> work(facets.begin(), facets.end());
  faces.insert(facets.begin(), facets.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& f : facets) {
      std::vector<IVector> meet;
      std::set_intersection(work[i].begin(), work[i].end(), f.begin(), f.end(), std::back_inserter(meet));
      if (!meet.empty() && faces.insert(meet).second) work.push_back(std::move(meet));
    }
  return faces;
}

}  // namespace

ToricData::ToricData(std::vector<IVector> a, std::vector<IVector> b) : a_(as_set(std::move(a))), b_(as_set(std::move(b))) {
  if (a_.empty() || b_.empty()) throw std::invalid_argument("toric data: A and B must be nonempty");
  dim_ = a_.front().size();
  for (const auto& x : a_)
    if (x.size() != dim_) throw std::invalid_argument("toric data: characters of A have different lengths");
  for (const auto& x : b_)
    if (!std::binary_search(a_.begin(), a_.end(), x)) throw std::invalid_argument("toric data: B is not a subset of A");
}

std::vector<IVector> ToricData::complement() const {
  std::vector<IVector> out;
  std::set_difference(a_.begin(), a_.end(), b_.begin(), b_.end(), std::back_inserter(out));
  return out;
}

bool star_condition(const ToricData& data, const IVector& u) {
  if (u.size() != data.dim()) throw std::invalid_argument("star_condition: cocharacter length mismatch");
  const auto rest = data.complement();
  if (rest.empty()) return true;
  long lhs = 0;
  for (const auto& b : data.b()) lhs = std::min(lhs, idot(u, b));
  long rhs = idot(u, rest.front());
  for (const auto& a : rest) rhs = std::min(rhs, idot(u, a));
  return lhs <= rhs;
}

ExtensionResult extension_criterion(const ToricData& data) {
  ExtensionResult out;
  const auto rest = data.complement();
  if (rest.empty()) return out;
  std::vector<IVector> outer = data.b();
  outer.push_back(IVector(data.dim(), 0));
  const Containment c = contains(hull(outer), hull(rest));
  if (c.contained) return out;
  out.extends = false;
  IVector u = primitive(clear_denominators(c.separator));
  if (star_condition(data, u)) throw std::logic_error("extension_criterion: separator does not violate (*)");
  out.witness = std::move(u);
  return out;
}

std::vector<IVector> boundary_witness(const std::vector<IVector>& a, const IVector& u) {
  if (a.empty()) throw std::invalid_argument("boundary_witness: empty character set");
  const auto pts = as_set(a);
  long best = idot(u, pts.front());
  for (const auto& x : pts) {
    if (x.size() != u.size()) throw std::invalid_argument("boundary_witness: length mismatch");
    best = std::min(best, idot(u, x));
  }
  std::vector<IVector> out;
  for (const auto& x : pts)
    if (idot(u, x) == best) out.push_back(x);
  return out;
}

std::optional<IVector> face_certificate(const std::vector<IVector>& a, const std::vector<IVector>& s) {
  const auto pts = as_set(a);
  const auto face = as_set(s);
  if (face.empty()) return std::nullopt;
  const std::size_t dim = pts.front().size();
  std::vector<IVector> off;
  std::set_difference(pts.begin(), pts.end(), face.begin(), face.end(), std::back_inserter(off));
  if (off.empty()) return IVector(dim, 0);

  // Variables u+ (dim), u- (dim), one slack per point off the face.
  // <u, s - s0> = 0 on the face, <u, a - s0> - slack = 1 off it.
  const IVector& s0 = face.front();
  const std::size_t rows = face.size() - 1 + off.size();
  const std::size_t cols = 2 * dim + off.size();
  RMatrix m(rows, cols);
  RVector rhs(rows, Rational(0));
  std::size_t r = 0;
  auto fill = [&](const IVector& x) {
    for (std::size_t k = 0; k < dim; ++k) {
      m(r, k) = x[k] - s0[k];
      m(r, dim + k) = -(x[k] - s0[k]);
    }
  };
  for (std::size_t i = 1; i < face.size(); ++i, ++r) fill(face[i]);
  for (std::size_t i = 0; i < off.size(); ++i, ++r) {
    fill(off[i]);
    m(r, 2 * dim + i) = -1;
    rhs[r] = 1;
  }
  const FeasibilityResult res = solve_feasibility(m, rhs);
  if (!res.feasible) return std::nullopt;
  RVector u(dim);
  for (std::size_t k = 0; k < dim; ++k) u[k] = res.point[k] - res.point[dim + k];
  IVector out = primitive(clear_denominators(u));
  if (boundary_witness(pts, out) != face) throw std::logic_error("face_certificate: certificate does not cut out the face");
  return out;
}

std::vector<FaceSupport> face_supports(const std::vector<IVector>& a) {
  const auto pts = as_set(a);
  if (pts.empty()) throw std::invalid_argument("face_supports: empty character set");
  for (const auto& x : pts)
    if (x.size() != pts.front().size()) throw std::invalid_argument("face_supports: length mismatch");
  std::vector<FaceSupport> out;
  for (const auto& s : candidate_faces(pts)) {
    auto u = face_certificate(pts, s);
    if (!u) throw std::logic_error("face_supports: candidate face has no certificate");
    out.push_back({s, *u});
  }
  return out;
}

Accessibility check_accessibility(const std::vector<IVector>& a) {
  Accessibility acc;
  acc.faces = face_supports(a);
  const std::size_t dim = acc.faces.front().points.front().size();
  for (const auto& f : acc.faces)
    for (long x : f.normal) acc.bound = std::max(acc.bound, std::labs(x));

  std::set<std::vector<IVector>> faces;
  for (const auto& f : acc.faces) faces.insert(f.points);
  std::set<std::vector<IVector>> seen;
  const auto pts = as_set(a);
  IVector u(dim, -acc.bound);
  while (true) {
    auto w = argmin_set(pts, u);
    if (faces.count(w)) seen.insert(std::move(w));
    else ++acc.spurious;
    std::size_t k = 0;
    while (k < dim && u[k] == acc.bound) u[k++] = -acc.bound;
    if (k == dim) break;
    ++u[k];
  }
  acc.realized = seen.size();
  return acc;
}

}  // namespace sspairs
