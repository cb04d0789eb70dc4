#pragma once

// Classical invariant theory of binary forms.
//
// A BinaryForm of degree d stores a_0..a_d, where a_i multiplies z^i; the
// homogeneous form is sum a_i x^i y^(d-i) with z = x/y. In the monomial basis
// of Sym(d) for SL(2), x^i y^(d-i) = e1^i e2^(d-i) has weight (i, d-i).
//
// Resultant convention: resultant(P, Q) = b_n^m prod_{Q(beta)=0} P(beta), which is
// the determinant of the Sylvester matrix with m shifted rows of Q placed
// above n shifted rows of P (m = deg P, n = deg Q). discriminant(P) = resultant(P, dP/dz) with
// formal degrees (d, d-1); it equals (-1)^(d(d-1)/2) a_d times the textbook
// discriminant.

#include "sspairs/matrix.hpp"
#include "sspairs/mpoly.hpp"
#include "sspairs/polytope.hpp"
#include "sspairs/upoly.hpp"

#include <optional>
#include <vector>

namespace sspairs {

class BinaryForm {
 public:
  /// Coefficients a_0..a_d; not all zero.
  explicit BinaryForm(RVector coeffs);
  static BinaryForm from_ints(const IVector& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RVector& coeffs() const { return coeffs_; }
  /// The dehomogenized polynomial in z.
  UPoly affine() const { return UPoly(coeffs_); }
  /// Order of vanishing at the point at infinity (x:y) = (1:0).
  int infinity_order() const { return degree() - affine().degree(); }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  RVector coeffs_;
};

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

struct OrdFactor {
  UPoly factor;  // monic, squarefree, pairwise coprime with the others
  int multiplicity = 0;
};

struct OrdProfile {
  int degree = 0;
  std::vector<OrdFactor> factors;  // ascending multiplicity
  int infinity = 0;
};

/// Yun's squarefree decomposition of a nonzero polynomial; constant factors omitted.
std::vector<OrdFactor> squarefree_decomposition(const UPoly& f);

OrdProfile ord_profile(const BinaryForm& f);

/// A class of points of P^1 on which both orders are constant: the roots of
/// `points` (or the point at infinity when `at_infinity`).
struct RootClass {
  bool at_infinity = false;
  UPoly points;
  int ord_g = 0;
  int ord_f = 0;
};

/// Root classes covering every zero of g, with the matching orders of f.
std::vector<RootClass> root_classes(const OrdProfile& f, const OrdProfile& g);

Rational resultant(const BinaryForm& p, const BinaryForm& q);
Rational discriminant(const BinaryForm& p);

/// Sylvester matrix for formal degrees m = p.size()-1, n = q.size()-1:
/// m shifted rows of Q's coefficients (high to low) above n rows of P's.
template <class R>
Matrix<R> sylvester_matrix(const std::vector<R>& p, const std::vector<R>& q, const R& zero) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  Matrix<R> s(m + n, m + n, zero);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(i, i + k) = q[n - k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(m + i, i + k) = p[m - k];
  return s;
}

/// The numerical semistability criterion for SL(2) pairs of forms (f, g):
/// deg f <= deg g and 2(ord_p g - ord_p f) <= deg g - deg f at every point.
bool sl2_pair_nss(const BinaryForm& f, const BinaryForm& g);

/// First root class violating the criterion, if any (requires deg f <= deg g).
std::optional<RootClass> sl2_violation(const BinaryForm& f, const BinaryForm& g);

/// The vertex map V(S) for S a subset of {1..d-1} (ascending).
IVector vertex_map(int d, const std::vector<int>& subset);
std::vector<IVector> chow_polytope_vertices(int d);
std::vector<IVector> disc_polytope_vertices(int d);

struct ScaledContainment {
  bool contained = false;
  bool identity_holds = false;
  bool ok() const { return contained && identity_holds; }
};

/// (2d-2) N(R_d) inside 2d N(Delta_d), plus the per-vertex convex-combination identity.
ScaledContainment scaled_containment_check(int d);

/// n(n+1)d - dmu; throws if not positive.
long hyperdisc_degree(long n, long d, long dmu);

struct PairDegrees {
  long deg_resultant = 0;
  long deg_discriminant = 0;
  long common = 0;
  bool divisible_by_n = false;
  bool divisible_by_n_plus_1 = false;
};
PairDegrees normalize_pair_degrees(long n, long d, long dmu);

/// Resultant(P, dP/dz) over Z[a_0..a_d] by Bareiss elimination (d <= 4).
MPoly symbolic_discriminant(int d);
/// symbolic_discriminant(d) divided by (-1)^(d(d-1)/2) a_d: the textbook discriminant.
MPoly symbolic_textbook_discriminant(int d);
/// Hull of the exponent vectors of a polynomial.
LatticePolytope newton_polytope(const MPoly& p);

}  // namespace sspairs
