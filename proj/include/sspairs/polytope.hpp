#pragma once

// Vertex-listed rational polytopes with exact containment and projection.

#include "sspairs/lattice.hpp"
#include "sspairs/rational.hpp"

#include <cstddef>
#include <vector>

namespace sspairs {

/// Canonical form: irredundant vertices, no duplicates, sorted lexicographically.
class LatticePolytope {
 public:
  const std::vector<RVector>& vertices() const { return vertices_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return vertices_.size(); }

  /// Affine dimension of the polytope.
  std::size_t dimension() const;

  /// k * P for k > 0.
  LatticePolytope scaled(const Rational& k) const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
  friend bool operator<(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ < b.vertices_;
  }

  friend LatticePolytope hull(const std::vector<RVector>& points);

 private:
  LatticePolytope(std::vector<RVector> vertices, std::size_t ambient)
      : vertices_(std::move(vertices)), ambient_(ambient) {}

  std::vector<RVector> vertices_;
  std::size_t ambient_ = 0;
};

/// Convex hull of a nonempty point list.
LatticePolytope hull(const std::vector<RVector>& points);
LatticePolytope hull(const std::vector<IVector>& points);

/// Is x a convex combination of the given points? Exact LP.
bool in_convex_hull(const std::vector<RVector>& points, const RVector& x);

struct Containment {
  bool contained = true;
  /// When not contained: functional c with c.q < min over the outer polytope.
  RVector separator;
  /// Index (into inner.vertices()) of the separated vertex.
  std::size_t vertex = 0;
  /// min_outer c - c.q, strictly positive when not contained.
  Rational margin;
};

Containment contains(const LatticePolytope& outer, const LatticePolytope& inner);

Rational support_min(const LatticePolytope& p, const RVector& u);
Rational support_min(const LatticePolytope& p, const Cocharacter& u);

struct MinNormPoint {
  RVector point;
  Rational squared_norm;
};

/// Largest affine dimension accepted by min_norm_point.
inline constexpr std::size_t kMinNormMaxDimension = 4;

/// The point of P nearest the origin, found by projecting onto the affine hull
/// of every affinely independent vertex subset and keeping feasible minima.
MinNormPoint min_norm_point(const LatticePolytope& p);

}  // namespace sspairs
