#include "oracles.hpp"
#include "sspairs/polytope.hpp"

#include <doctest.h>

using namespace sspairs;

TEST_CASE("hull removes interior and duplicate points") {
  const auto p = hull(std::vector<IVector>{{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(p.vertices() == std::vector<RVector>{{0, 0}, {0, 2}, {2, 0}});
  CHECK(p.dimension() == 2);
  CHECK(hull(std::vector<IVector>{{1, 1}}).dimension() == 0);
  CHECK(hull(std::vector<IVector>{{0, 0}, {1, 1}, {2, 2}}).vertices() == std::vector<RVector>{{0, 0}, {2, 2}});
}

TEST_CASE("containment with separator") {
  const auto outer = hull(std::vector<IVector>{{0, 0}, {2, 0}, {0, 2}});
  CHECK(contains(outer, hull(std::vector<IVector>{{1, 1}, {0, 1}})).contained);
  const auto inner = hull(std::vector<IVector>{{2, 2}, {0, 0}});
  const Containment c = contains(outer, inner);
  REQUIRE_FALSE(c.contained);
  const RVector& q = inner.vertices()[c.vertex];
  CHECK(dot(c.separator, q) < support_min(outer, c.separator));
  CHECK(c.margin > 0);
}

TEST_CASE("scaling") {
  const auto p = hull(std::vector<IVector>{{0, 1}, {1, 0}}).scaled(Rational(3));
  CHECK(p.vertices() == std::vector<RVector>{{0, 3}, {3, 0}});
}

TEST_CASE("min norm point examples") {
  // Segment from (1,0,-1) to (0,1,-1): nearest point (1/2, 1/2, -1), |.|^2 = 3/2.
  const auto seg = hull(std::vector<RVector>{{1, 0, -1}, {0, 1, -1}});
  const auto m = min_norm_point(seg);
  CHECK(m.point == RVector{Rational(1, 2), Rational(1, 2), -1});
  CHECK(m.squared_norm == Rational(3, 2));
  const auto single = min_norm_point(hull(std::vector<RVector>{{Rational(2, 3), Rational(2, 3), Rational(-4, 3)}}));
  CHECK(single.squared_norm == Rational(8, 3));
}

TEST_CASE("min norm point beats every vertex and sampled point") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RVector> pts;
    const int n = static_cast<int>(rng.uniform_int(1, 5));
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform_int(-3, 3), rng.uniform_int(-3, 3), rng.uniform_int(-3, 3)});
    const auto poly = hull(pts);
    const auto m = min_norm_point(poly);
    CHECK(in_convex_hull(poly.vertices(), m.point));
    CHECK(dot(m.point, m.point) == m.squared_norm);
    // Optimality: <x - p, p> >= 0 for every vertex x.
    for (const auto& x : poly.vertices()) {
      RVector d(3);
      for (int k = 0; k < 3; ++k) d[k] = x[k] - m.point[k];
      CHECK(dot(d, m.point) >= 0);
    }
  }
}
