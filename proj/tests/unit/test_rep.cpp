#include "oracles.hpp"
#include "sspairs/fixtures.hpp"
#include "sspairs/rep.hpp"

#include <doctest.h>

using namespace sspairs;

TEST_CASE("module shapes and dimensions") {
  CHECK(ModuleDescriptor::sym(1, 4).dimension() == 5);
  CHECK(ModuleDescriptor::sym(2, 2).dimension() == 6);
  CHECK(ModuleDescriptor::wedge(3, 2).dimension() == 6);
  const auto t = ModuleDescriptor::parse(2, "Tensor(Sym(1),Wedge(2),Sym(1))");
  CHECK(t.dimension() == 27);
  CHECK(t.shape_string() == "Tensor(Sym(1),Wedge(2),Sym(1))");
  CHECK(t.key_length() == 8);
  CHECK(basis(t).size() == 27);
  CHECK_THROWS_AS(ModuleDescriptor::parse(2, "Sym(x)"), std::invalid_argument);
  CHECK_THROWS_AS(ModuleDescriptor::parse(2, "Wedge(4)"), std::invalid_argument);
}

TEST_CASE("weights of symmetric and exterior powers") {
  const auto s = ModuleDescriptor::sym(1, 3);
  const auto ws = module_weights(s);
  CHECK(ws.size() == 4);
  const auto mult = weight_multiplicities(ModuleDescriptor::parse(1, "Tensor(Sym(1),Sym(1))"));
  CHECK(mult.at(Weight(IVector{1, 1})) == 2);
  CHECK(weight_of(ModuleDescriptor::wedge(2, 2), BasisKey{0, 2}).coords() == IVector{1, 0, 1});
}

TEST_CASE("weighted vectors reject zero and bad keys") {
  const auto s = ModuleDescriptor::sym(1, 2);
  CHECK_THROWS_AS(WeightedVector(s, {{BasisKey{1, 1}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedVector(s, {{BasisKey{1, 2}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedVector::from_weights(s, {{{3, 0}, 1}}), std::invalid_argument);
}

TEST_CASE("action is a representation") {
  Rng rng(3);
  const auto m = ModuleDescriptor::parse(2, "Tensor(Sym(2),Wedge(2))");
  for (int trial = 0; trial < 5; ++trial) {
    const RMatrix a = random_elementary_sl(rng, 3), b = random_elementary_sl(rng, 3);
    CHECK(action_matrix(m, RMatrix(a * b)) == action_matrix(m, a) * action_matrix(m, b));
  }
  CHECK(action_matrix(m, RMatrix::identity(3)) == RMatrix::identity(m.dimension()));
}

TEST_CASE("matrix_action needs determinant one") {
  const auto s = ModuleDescriptor::sym(1, 2);
  const auto v = WeightedVector::from_weights(s, {{{1, 1}, 1}});
  CHECK_THROWS_AS(matrix_action(RMatrix::from_rows({{2, 0}, {0, 1}}), v), std::invalid_argument);
  // (x + y)(y) under x -> x, y -> x + y style shear.
  const RMatrix sh = RMatrix::from_rows({{1, 1}, {0, 1}});
  const auto img = matrix_action(sh, v);  // e1 e2 -> e1 (e1 + e2)
  CHECK(img.terms().size() == 2);
}

TEST_CASE("X_nil realization: highest weight vectors and E21") {
  using namespace fixtures;
  const auto xi310 = xnil_xi310(), xi220 = xnil_xi220();
  CHECK(xi310.support() == std::vector<Weight>{Weight(IVector{3, 1, 0})});
  CHECK(xi220.support() == std::vector<Weight>{Weight(IVector{2, 2, 0})});
  // exp(E_ij) = I + E_ij fixes a vector killed by E_ij.
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}) {
    RMatrix e = RMatrix::identity(3);
    e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
    CHECK(matrix_action(e, xi310) == xi310);
    CHECK(matrix_action(e, xi220) == xi220);
  }
  // The (2,2,0) component of exp(E21) xi310 is E21 . xi310.
  RMatrix e21 = RMatrix::identity(3);
  e21(1, 0) = 1;
  const auto img = matrix_action(e21, xi310);
  std::map<BasisKey, Rational> part;
  for (const auto& [k, c] : img.terms())
    if (weight_of(xnil_module(), k) == Weight(IVector{2, 2, 0})) part[k] = c;
  CHECK(WeightedVector(xnil_module(), part) == xnil_e21_xi310());
  // sigma = exp(E12) sends E23 (x) e1 to E23 (x) e1 + xi310.
  std::map<BasisKey, Rational> expect = xnil_base().terms();
  for (const auto& [k, c] : xi310.terms()) expect[k] += c;
  CHECK(matrix_action(xnil_sigma(), xnil_base()) == WeightedVector(xnil_module(), expect));
}

TEST_CASE("weyl orbit polytope and dominance on small cases") {
  CHECK(dominance_leq({2, 1, 1}, {3, 1}));
  CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
  const auto p = weyl_orbit_polytope(Weight(IVector{2, 0, 0}));
  CHECK(p.size() == 3);
  CHECK_THROWS_AS(weyl_orbit_polytope(Weight(IVector{0, 1, 0})), std::invalid_argument);
}

TEST_CASE("attainable subpolytopes of Sym(2) for SL(2)") {
  // Weights (2,0), (1,1), (0,2): hulls of nonempty subsets.
  const auto polys = attainable_polytopes(ModuleDescriptor::sym(1, 2));
  CHECK(polys.size() == 6);
}
