#pragma once

// Exact phase-one simplex over the rationals.

#include "sspairs/matrix.hpp"
#include "sspairs/rational.hpp"

namespace sspairs {

struct FeasibilityResult {
  bool feasible = false;
  /// A basic solution x >= 0 of A x = b when feasible.
  RVector point;
  /// When infeasible: y with y^T A >= 0 componentwise and y^T b < 0.
  RVector farkas;
};

/// Decides whether {x >= 0 : A x = b} is nonempty. Bland's rule guarantees
/// termination; redundant equality rows are tolerated.
FeasibilityResult solve_feasibility(const RMatrix& a, const RVector& b);

}  // namespace sspairs
