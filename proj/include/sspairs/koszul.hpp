#pragma once

// Torsion (determinant) of bounded exact complexes of finite-dimensional
// rational vector spaces, and Cayley's computation of the resultant of two
// binary forms as the torsion of a Koszul complex.

#include "sspairs/binaryforms.hpp"
#include "sspairs/matrix.hpp"

#include <vector>

namespace sspairs {

/// 0 -> C_0 -> C_1 -> ... -> C_k -> 0 with maps[i] : C_i -> C_{i+1}, stored as a
/// dims[i+1] x dims[i] matrix in the standard bases.
class FiniteComplex {
 public:
  /// Validates shapes and maps[i+1] * maps[i] = 0.
  FiniteComplex(std::vector<std::size_t> dims, std::vector<RMatrix> maps);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<RMatrix>& maps() const { return maps_; }
  std::size_t length() const { return maps_.size(); }
  /// rank(maps[i]) for each i.
  std::vector<std::size_t> ranks() const;
  bool is_exact() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<RMatrix> maps_;
};

/// Termwise direct sum of two complexes of the same length.
FiniteComplex direct_sum(const FiniteComplex& a, const FiniteComplex& b);

/// Determinant of an exact complex, up to sign: greedy lexicographic choice of
/// invertible minors M_i of each map, combined as prod M_i^((-1)^(k-1-i)), so
/// a one-map complex gives det(M). Throws std::domain_error if not exact.
Rational torsion(const FiniteComplex& c);

/// Matrix of h -> f h from S_k to S_{k + deg f}, S_k being polynomials of degree <= k.
RMatrix multiplication_matrix(const BinaryForm& f, int k);

/// 0 -> S_{m-2d} -> S_{m-d} + S_{m-d} -> S_m -> 0, h -> (-g h, f h), (p, q) -> f p + g q.
FiniteComplex koszul_complex(const BinaryForm& f, const BinaryForm& g, int m);

/// torsion(koszul_complex(f, g, m)) = +-resultant(f, g); needs deg f = deg g = d >= 1
/// and m >= 2d - 1. Throws std::domain_error when f and g share a root.
Rational koszul_resultant(const BinaryForm& f, const BinaryForm& g, int m);

/// sum_j (-1)^(j+1) j h0[j].
long weighted_euler_degree(const std::vector<long>& h0);

/// h^0(P^1, O(k)) = max(k + 1, 0).
long line_h0(long k);

}  // namespace sspairs
