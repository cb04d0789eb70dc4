#include "sspairs/polytope.hpp"

#include "sspairs/lp.hpp"
#include "sspairs/matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sspairs {

namespace {

// Columns (p_j, 1) and right-hand side (x, 1).
FeasibilityResult convex_membership(const std::vector<const RVector*>& points, const RVector& x) {
  const std::size_t dim = x.size();
  RMatrix a(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) a(i, j) = (*points[j])[i];
    a(dim, j) = 1;
  }
  RVector b = x;
  b.emplace_back(1);
  return solve_feasibility(a, b);
}

}  // namespace

std::size_t LatticePolytope::dimension() const {
  if (vertices_.size() <= 1) return 0;
  RMatrix d(vertices_.size() - 1, ambient_);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) d(i - 1, j) = vertices_[i][j] - vertices_[0][j];
  return rank(d);
}

LatticePolytope LatticePolytope::scaled(const Rational& k) const {
  if (k <= 0) throw std::invalid_argument("polytope scale factor must be positive");
  std::vector<RVector> v = vertices_;
  for (auto& p : v)
    for (auto& c : p) c *= k;
  return LatticePolytope(std::move(v), ambient_);
}

LatticePolytope hull(const std::vector<RVector>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("hull: points of different lengths");

  std::vector<RVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<bool> alive(pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // The lexicographic extremes are always vertices.
    if (i == 0 || i + 1 == pts.size()) continue;
    std::vector<const RVector*> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i && alive[j]) others.push_back(&pts[j]);
    if (convex_membership(others, pts[i]).feasible) alive[i] = false;
  }
  std::vector<RVector> vertices;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (alive[i]) vertices.push_back(std::move(pts[i]));
  return LatticePolytope(std::move(vertices), dim);
}

LatticePolytope hull(const std::vector<IVector>& points) {
  std::vector<RVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.push_back(to_rational(p));
  return hull(r);
}

bool in_convex_hull(const std::vector<RVector>& points, const RVector& x) {
  if (points.empty()) return false;
  for (const auto& p : points) {
    if (p.size() != x.size()) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    if (p == x) return true;
  }
  std::vector<const RVector*> ptrs;
  for (const auto& p : points) ptrs.push_back(&p);
  return convex_membership(ptrs, x).feasible;
}

Containment contains(const LatticePolytope& outer, const LatticePolytope& inner) {
  if (outer.ambient() != inner.ambient()) throw std::invalid_argument("contains: dimension mismatch");
  std::vector<const RVector*> ptrs;
  for (const auto& p : outer.vertices()) ptrs.push_back(&p);
  const std::size_t dim = outer.ambient();

  Containment result;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    const RVector& q = inner.vertices()[k];
    if (std::binary_search(outer.vertices().begin(), outer.vertices().end(), q)) continue;
    FeasibilityResult lp = convex_membership(ptrs, q);
    if (lp.feasible) continue;

    RVector c(lp.farkas.begin(), lp.farkas.begin() + static_cast<long>(dim));
    Rational outer_min = support_min(outer, c);
    Rational at_q = dot(c, q);
    if (!(at_q < outer_min)) throw std::logic_error("contains: separating functional is not strict");
    result.contained = false;
    result.separator = std::move(c);
    result.vertex = k;
    result.margin = outer_min - at_q;
    return result;
  }
  return result;
}

Rational support_min(const LatticePolytope& p, const RVector& u) {
  if (u.size() != p.ambient()) throw std::invalid_argument("support_min: dimension mismatch");
  Rational best = dot(p.vertices().front(), u);
  for (const auto& v : p.vertices()) {
    Rational x = dot(v, u);
    if (x < best) best = x;
  }
  return best;
}

Rational support_min(const LatticePolytope& p, const Cocharacter& u) {
  return support_min(p, to_rational(u.coords()));
}

MinNormPoint min_norm_point(const LatticePolytope& p) {
  const std::size_t affine_dim = p.dimension();
  if (affine_dim > kMinNormMaxDimension)
    throw std::invalid_argument("min_norm_point: affine dimension " + std::to_string(affine_dim) +
                                " exceeds the enumeration bound " +
                                std::to_string(kMinNormMaxDimension));
  const auto& verts = p.vertices();
  const std::size_t dim = p.ambient();

  MinNormPoint best;
  bool found = false;
  std::vector<std::size_t> subset;

  auto consider = [&]() {
    const RVector& base = verts[subset[0]];
    const std::size_t s = subset.size() - 1;
    RVector x = base;
    if (s > 0) {
      std::vector<RVector> diff(s, RVector(dim));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < dim; ++j) diff[i][j] = verts[subset[i + 1]][j] - base[j];
      RMatrix gram(s, s);
      RVector rhs(s);
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t k = 0; k < s; ++k) gram(i, k) = dot(diff[i], diff[k]);
        rhs[i] = -dot(diff[i], base);
      }
      RVector mu;
      if (!solve_square(gram, rhs, mu)) return;  // affinely dependent
      Rational first = 1;
      for (const auto& m : mu) {
        if (m < 0) return;
        first -= m;
      }
      if (first < 0) return;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < dim; ++j) x[j] += mu[i] * diff[i][j];
    }
    Rational n2 = dot(x, x);
    if (!found || n2 < best.squared_norm || (n2 == best.squared_norm && x < best.point)) {
      best.point = std::move(x);
      best.squared_norm = n2;
      found = true;
    }
  };

  std::function<void(std::size_t)> enumerate = [&](std::size_t start) {
    if (!subset.empty()) consider();
    if (subset.size() == affine_dim + 1) return;
    for (std::size_t i = start; i < verts.size(); ++i) {
      subset.push_back(i);
      enumerate(i + 1);
      subset.pop_back();
    }
  };
  enumerate(0);
  return best;
}

}  // namespace sspairs
