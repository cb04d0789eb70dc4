#pragma once

// Extension of toric morphisms and accessibility of boundary points of torus
// orbit closures, phrased in the character lattice of the torus.
//
// For characters B inside A, the projection of X_A extends to a morphism iff
// hull(A \ B) lies in hull({0} + B), equivalently iff for every cocharacter u
//   min{0, min_B <u,b>} <= min_{A\B} <u,a>.                         (*)

#include "sspairs/rational.hpp"

#include <optional>
#include <vector>

namespace sspairs {

class ToricData {
 public:
  /// A and B are sets (duplicates are merged); B must be a nonempty subset of A.
  ToricData(std::vector<IVector> a, std::vector<IVector> b);

  const std::vector<IVector>& a() const { return a_; }
  const std::vector<IVector>& b() const { return b_; }
  std::size_t dim() const { return dim_; }
  /// A \ B, sorted.
  std::vector<IVector> complement() const;

 private:
  std::vector<IVector> a_;
  std::vector<IVector> b_;
  std::size_t dim_ = 0;
};

/// Condition (*) for one cocharacter; vacuously true when A = B.
bool star_condition(const ToricData& data, const IVector& u);

struct ExtensionResult {
  bool extends = true;
  /// When not: an integer u violating (*).
  std::optional<IVector> witness;
};

ExtensionResult extension_criterion(const ToricData& data);

/// {a in A : <u,a> minimal}: the support of lim_{t->0} lambda_u(t).[v] for v
/// with full support A.
std::vector<IVector> boundary_witness(const std::vector<IVector>& a, const IVector& u);

struct FaceSupport {
  std::vector<IVector> points;  // A intersected with the face, sorted
  IVector normal;               // a primitive integer u whose argmin set is `points`
};

/// A primitive integer u with argmin_A <u, .> = s, if s is a face support of A.
std::optional<IVector> face_certificate(const std::vector<IVector>& a, const std::vector<IVector>& s);

/// Every nonempty face support of hull(A): facets and their intersections,
/// each certified by an exact LP.
std::vector<FaceSupport> face_supports(const std::vector<IVector>& a);

struct Accessibility {
  std::vector<FaceSupport> faces;
  /// Largest |coordinate| among the certificates; the box sweep radius.
  long bound = 0;
  /// Faces whose support is the argmin set of some u in [-bound, bound]^dim.
  std::size_t realized = 0;
  /// Argmin sets found in the sweep that are not face supports (always empty).
  std::size_t spurious = 0;
  bool ok() const { return realized == faces.size() && spurious == 0; }
};

/// Certifies that every face support of hull(A) is reached by an integer
/// cocharacter in an explicit box, by sweeping the whole box.
Accessibility check_accessibility(const std::vector<IVector>& a);

}  // namespace sspairs
