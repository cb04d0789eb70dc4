#pragma once

// Small rational SL(N+1)-modules realized in explicit bases: symmetric powers
// (monomials), exterior powers (sorted index sets), tensor products of those,
// and the trivial module.

#include "sspairs/lattice.hpp"
#include "sspairs/matrix.hpp"
#include "sspairs/polytope.hpp"

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sspairs {

enum class ShapeKind { Trivial, Sym, Wedge, Tensor };

class ModuleDescriptor {
 public:
  static ModuleDescriptor trivial(int rank);
  static ModuleDescriptor sym(int rank, int degree);
  static ModuleDescriptor wedge(int rank, int k);
  static ModuleDescriptor tensor(int rank, std::vector<ModuleDescriptor> factors);
  /// "Trivial", "Sym(4)", "Wedge(2)", "Tensor(Sym(1),Wedge(2),Sym(1))".
  static ModuleDescriptor parse(int rank, std::string_view shape);

  /// N, for the group SL(N+1).
  int rank() const { return rank_; }
  /// N+1, the length of weight vectors.
  std::size_t ambient() const { return static_cast<std::size_t>(rank_) + 1; }
  ShapeKind kind() const { return kind_; }
  int degree() const { return degree_; }
  const std::vector<ModuleDescriptor>& factors() const { return factors_; }

  std::size_t dimension() const;
  std::string shape_string() const;
  /// Number of integers in a basis key of this module.
  std::size_t key_length() const;

  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;

 private:
  ModuleDescriptor(int rank, ShapeKind kind, int degree, std::vector<ModuleDescriptor> factors);

  int rank_ = 0;
  ShapeKind kind_ = ShapeKind::Trivial;
  int degree_ = 0;
  std::vector<ModuleDescriptor> factors_;
};

/// Sym: exponent vector. Wedge: ascending index list. Tensor: concatenation
/// of factor keys. Trivial: empty.
using BasisKey = std::vector<int>;

/// Basis keys in lexicographic order.
std::vector<BasisKey> basis(const ModuleDescriptor& module);
bool is_basis_key(const ModuleDescriptor& module, const BasisKey& key);
Weight weight_of(const ModuleDescriptor& module, const BasisKey& key);
/// Distinct weights of the module, sorted.
std::vector<Weight> module_weights(const ModuleDescriptor& module);
/// Weight multiset of the realization: weight -> multiplicity.
std::map<Weight, int> weight_multiplicities(const ModuleDescriptor& module);

/// A nonzero vector given by its nonzero coordinates in the module basis.
class WeightedVector {
 public:
  WeightedVector(ModuleDescriptor module, std::map<BasisKey, Rational> terms);

  /// For multiplicity-free modules (Sym, Wedge, Trivial): terms keyed by weight.
  static WeightedVector from_weights(const ModuleDescriptor& module,
                                     const std::vector<std::pair<IVector, Rational>>& terms);

  const ModuleDescriptor& module() const { return module_; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }

  /// Distinct weights with a nonzero weight-space component, sorted.
  std::vector<Weight> support() const;

  friend bool operator==(const WeightedVector&, const WeightedVector&) = default;

 private:
  ModuleDescriptor module_;
  std::map<BasisKey, Rational> terms_;
};

/// Hull of the traceless representatives of the support.
LatticePolytope weight_polytope(const WeightedVector& v);
LatticePolytope weight_polytope(const std::vector<Weight>& weights);

/// Hull of all coordinate permutations of a weakly decreasing weight.
LatticePolytope weyl_orbit_polytope(const Weight& lambda);

/// Partial sums of lambda bounded by those of mu (shorter input padded with zeros).
bool dominance_leq(const IVector& lambda, const IVector& mu);

/// Image of one basis vector under g acting on C^{N+1} by g e_j = sum_i g(i,j) e_i.
template <class T>
std::map<BasisKey, T> basis_image(const ModuleDescriptor& module, const Matrix<T>& g, const BasisKey& key);

/// Matrix of g on the module in the order of basis(module).
template <class T>
Matrix<T> action_matrix(const ModuleDescriptor& module, const Matrix<T>& g);

/// sigma . v for sigma in SL(N+1, Q). Throws if det(sigma) != 1.
WeightedVector matrix_action(const RMatrix& sigma, const WeightedVector& v);

/// Distinct hulls of nonempty subsets of the module's weights.
std::vector<LatticePolytope> attainable_polytopes(const ModuleDescriptor& module, std::size_t size_cap = 12);

}  // namespace sspairs
