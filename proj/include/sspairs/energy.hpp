#pragma once

// The energy of a pair, nu(sigma) = log|sigma.w|^2 - log|sigma.v|^2, for
// explicit Hermitian norms on the two modules, together with Fubini-Study
// distances and energy profiles along one-parameter subgroups.
//
// This is the only floating-point module. For rational sigma the squared
// norms are computed exactly and only the final logarithm is inexact.

#include "sspairs/pairs.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace sspairs {

enum class HermitianKind {
  WeightOrthonormal,  // the module basis is orthonormal
  Bombieri,           // Sym(d) of SL(2): |x^i y^(d-i)|^2 = 1 / C(d, i)
};

class HermitianStructure {
 public:
  explicit HermitianStructure(ModuleDescriptor module, HermitianKind kind = HermitianKind::WeightOrthonormal);

  const ModuleDescriptor& module() const { return module_; }
  HermitianKind kind() const { return kind_; }
  /// |e_key|^2 for a basis vector.
  Rational basis_weight(const BasisKey& key) const;
  /// Squared norm of an exact vector.
  Rational squared_norm(const WeightedVector& x) const;

 private:
  ModuleDescriptor module_;
  HermitianKind kind_;
};

using CVector = std::vector<std::complex<double>>;
using CMatrix = Matrix<std::complex<double>>;

/// Hermitian structures for (V, W), weight-orthonormal by default.
struct PairHermitian {
  HermitianStructure v;
  HermitianStructure w;
  static PairHermitian standard(const Pair& p, HermitianKind kind = HermitianKind::WeightOrthonormal);
};

double energy(const Pair& p, const RMatrix& sigma, const PairHermitian& h);
double energy(const Pair& p, const RMatrix& sigma);
/// For complex sigma (e.g. special unitary), evaluated in double precision.
double energy(const Pair& p, const CMatrix& sigma, const PairHermitian& h);

/// Coordinates of sigma.x in the order of basis(module).
CVector act(const CMatrix& sigma, const WeightedVector& x);

/// Fubini-Study distance in [0, pi/2] for a diagonal Hermitian metric with the
/// given basis weights (empty weights: standard metric).
double fs_distance(const CVector& x, const CVector& y, const std::vector<double>& weights = {});

/// |nu(sigma) - log tan^2 d(sigma.[(v,w)], sigma.[(v,0)])| with the orthogonal
/// sum metric on V + W.
double distance_identity_residual(const Pair& p, const RMatrix& sigma, const PairHermitian& h);
double distance_identity_residual(const Pair& p, const CMatrix& sigma, const PairHermitian& h);

struct EnergyProfile {
  Cocharacter u;
  std::vector<double> t;   // strictly decreasing
  std::vector<double> nu;
  double log_t2(std::size_t i) const;
};

/// nu(lambda_u(t)) on the grid by weight-space evaluation.
EnergyProfile energy_along_1ps(const Pair& p, const Cocharacter& u, const std::vector<double>& grid,
                               const PairHermitian& h);
EnergyProfile energy_along_1ps(const Pair& p, const Cocharacter& u, const std::vector<double>& grid);

/// Geometric grid from tmax down to tmin (inclusive), `count` points.
std::vector<double> log_grid(double tmin, double tmax = 1.0, std::size_t count = 25);

/// Least-squares slope of nu against log t^2 over the half of the samples
/// with the smallest t.
double asymptotic_slope(const EnergyProfile& profile);

struct EnergySample {
  double best = 0;
  RMatrix sigma;
  std::size_t evaluated = 0;
};

/// Smallest energy seen over the identity and `samples` random SL elements.
/// A sampled upper bound, not the infimum.
EnergySample energy_infimum_sample(const Pair& p, const PairHermitian& h, std::size_t samples, std::uint64_t seed);

}  // namespace sspairs
