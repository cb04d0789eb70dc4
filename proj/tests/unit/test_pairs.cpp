#include "oracles.hpp"
#include "sspairs/fixtures.hpp"
#include "sspairs/pairs.hpp"

#include <doctest.h>

using namespace sspairs;

namespace {

WeightedVector form(const IVector& c) {
  const int d = static_cast<int>(c.size()) - 1;
  const auto m = d == 0 ? ModuleDescriptor::trivial(1) : ModuleDescriptor::sym(1, d);
  std::vector<std::pair<IVector, Rational>> t;
  for (int i = 0; i <= d; ++i)
    if (c[static_cast<std::size_t>(i)] != 0) t.push_back({{i, d - i}, c[static_cast<std::size_t>(i)]});
  return WeightedVector::from_weights(m, t);
}

// min over supports of <chi, u>, computed directly from coordinates.
long brute_weight(const WeightedVector& v, const IVector& u) {
  long best = 0;
  bool first = true;
  for (const auto& w : v.support()) {
    long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += w.coords()[i] * u[i];
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

}  // namespace

TEST_CASE("pair construction") {
  CHECK_THROWS_AS(Pair(form({1}), WeightedVector::from_weights(ModuleDescriptor::sym(2, 1), {{{1, 0, 0}, 1}})),
                  std::invalid_argument);
}

TEST_CASE("1-PS weights and the generalized Futaki invariant") {
  const auto o = fixtures::xnil_xi310();
  CHECK(weight_1ps(o, Cocharacter(IVector{-1, 1, 0})) == -2);
  const Pair p(form({1}), form({0, 0, 1}));  // (1, x^2)
  CHECK(futaki_gen(p, Cocharacter(IVector{1, -1})) == 2);
  CHECK(futaki_gen(p, Cocharacter(IVector{-1, 1})) == -2);
}

TEST_CASE("fixed torus check: witness is positive, agrees with 0 in N(w) for v = 1") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = static_cast<int>(rng.uniform_int(1, 6));
    IVector c(static_cast<std::size_t>(d) + 1, 0);
    const int k = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(rng.uniform_int(0, d))] = rng.uniform_int(1, 3);
    if (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; })) c[0] = 1;
    const Pair p(form({1}), form(c));
    const TorusCheck t = nss_fixed_torus(p);
    // 0 in N(w) iff w has support on both sides of the middle (or at it).
    long lo = d, hi = 0;
    for (int i = 0; i <= d; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) lo = std::min<long>(lo, i), hi = std::max<long>(hi, i);
    const bool zero_inside = 2 * lo <= d && 2 * hi >= d;
    CHECK(t.semistable == zero_inside);
    if (!t.semistable) {
      REQUIRE(t.witness);
      CHECK(t.witness_futaki > 0);
      CHECK(brute_weight(p.w, t.witness->coords()) -
                brute_weight(p.v, t.witness->coords()) ==
            t.witness_futaki);
    }
  }
}

TEST_CASE("binary form verdicts") {
  const Pair bad(form({1}), form({0, 0, 1}));
  const Verdict v = nss_check(bad, 10, 1);
  CHECK(v.status == VerdictStatus::Unstable);
  CHECK(v.method == "sl2-root-orders");
  CHECK(verify_verdict(bad, v));

  const Verdict q = nss_check(fixtures::quadric_pair(), 10, 1);
  CHECK(q.status == VerdictStatus::ProvenSemistable);
  CHECK(verify_verdict(fixtures::quadric_pair(), q));

  // Double root at z = 1: sheared to 0, witness on the conjugate.
  const Pair shifted(form({1}), form({1, -2, 1}));
  const Verdict s = nss_check(shifted, 10, 1);
  REQUIRE(s.status == VerdictStatus::Unstable);
  REQUIRE(s.conjugator);
  REQUIRE(s.witness);
  CHECK(futaki_gen(conjugate(*s.conjugator, shifted), *s.witness) > 0);

  // Double roots at +-sqrt(2): no rational conjugator, certificate is the root class.
  const Pair irr(form({1, 0, 1}), form({4, 0, -4, 0, 1}));  // (z^2 + 1, (z^2 - 2)^2)
  const Verdict r = nss_check(irr, 10, 1);
  CHECK(r.status == VerdictStatus::Unstable);
  REQUIRE(r.root_class);
  CHECK(r.root_class->points == UPoly(RVector{-2, 0, 1}));
  CHECK(verify_verdict(irr, r));

  // e > d.
  const Pair longer(form({1, 0, 1}), form({1, 1}));
  const Verdict l = nss_check(longer, 10, 1);
  CHECK(l.status == VerdictStatus::Unstable);
  CHECK(verify_verdict(longer, l));

  CHECK(to_string(VerdictStatus::NotRefuted) == "not_refuted");
}

TEST_CASE("fixed-torus-only mode") {
  const Pair p = fixtures::quadric_pair();
  const Verdict v = nss_check(p, 0, 1, NssMode::FixedTorusOnly);
  CHECK(v.status == VerdictStatus::ProvenSemistable);
  CHECK(v.method == "fixed-torus");
  // (1, (x + y)^2) is semistable only after conjugation; the fixed torus sees it as semistable too.
  const Pair sq(form({1}), form({1, 2, 1}));
  CHECK(nss_check(sq, 0, 1, NssMode::FixedTorusOnly).status == VerdictStatus::ProvenSemistable);
  CHECK(nss_check(sq, 0, 1).status == VerdictStatus::Unstable);
}

TEST_CASE("torus sweep for SL(3)") {
  const Pair p = fixtures::xnil_pair();
  CHECK(nss_fixed_torus(p).semistable);
  const Verdict v = nss_check(p, 20, 7);
  CHECK(v.method == "torus-sweep");
  CHECK(v.status == VerdictStatus::NotRefuted);
  CHECK(v.tori_tested == 21);

  // v = e1^2 against w = e2^2: separated on the diagonal torus.
  const auto s = ModuleDescriptor::sym(2, 2);
  const Pair q(WeightedVector::from_weights(s, {{{2, 0, 0}, 1}}), WeightedVector::from_weights(s, {{{0, 2, 0}, 1}}));
  const Verdict u = nss_check(q, 5, 1);
  CHECK(u.status == VerdictStatus::Unstable);
  CHECK(verify_verdict(q, u));
}

TEST_CASE("characteristic of the X_nil base point") {
  const Characteristic c = characteristic(fixtures::xnil_base());
  CHECK(c.chi_min_canonical == RVector{2, 2, 0});
  CHECK(c.squared_height == Rational(8, 3));
  CHECK(c.h == RVector{Rational(1, 2), Rational(1, 2), -1});
  CHECK(c.h_dominant == RVector{Rational(1, 2), Rational(1, 2), -1});
  CHECK(c.height == doctest::Approx(std::sqrt(8.0 / 3.0)));
  std::vector<Weight> face;
  for (const auto& chi : module_weights(fixtures::xnil_module()))
    if (dot(c.h, chi.coords()) == 2) face.push_back(chi.canonical());
  std::sort(face.begin(), face.end());
  CHECK(face == std::vector<Weight>{Weight(IVector{1, 3, 0}), Weight(IVector{2, 2, 0}), Weight(IVector{3, 1, 0})});
  CHECK_THROWS_AS(characteristic(form({0, 1, 0})), std::domain_error);
}

TEST_CASE("characteristic: h pairs to 2 on the closest face") {
  Rng rng(9);
  const auto m = ModuleDescriptor::sym(2, 3);
  const auto keys = basis(m);
  for (int trial = 0; trial < 30; ++trial) {
    std::map<BasisKey, Rational> t;
    const int k = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < k; ++i) t[keys[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(keys.size()) - 1))]] = 1;
    const WeightedVector v(m, t);
    if (in_convex_hull(weight_polytope(v).vertices(), RVector(3, 0))) {
      CHECK_THROWS_AS(characteristic(v), std::domain_error);
      continue;
    }
    const Characteristic c = characteristic(v);
    for (const auto& chi : v.support()) CHECK(dot(c.h, chi.traceless()) >= 2);
    CHECK(!gamma_face(v, c.h).empty());
    CHECK(dot(c.h, c.chi_min) == 2);
  }
}

TEST_CASE("Futaki character on tori") {
  const Pair p = fixtures::xnil_pair();
  const FutakiCharacter f = futaki_character_torus(p, diagonal_torus_generators(3));
  CHECK(f.is_zero());
  const auto ratios = futaki_character_torus(p, std::vector<RVector>{{2, Rational(1, 2), 1}, {3, 1, Rational(1, 3)}});
  CHECK(ratios == std::vector<Rational>{1, 1});
  CHECK_THROWS_AS(futaki_character_torus(p, std::vector<RVector>{{2, 1, 1}}), std::invalid_argument);

  const Pair q(form({1}), form({0, 0, 1}));
  const FutakiCharacter g = futaki_character_torus(q, diagonal_torus_generators(2));
  CHECK_FALSE(g.is_zero());
  CHECK(g.values == std::vector<long>{2});
  // chi_w / chi_v at diag(t, 1/t) is t^2.
  CHECK(futaki_character_torus(q, std::vector<RVector>{{3, Rational(1, 3)}}) == std::vector<Rational>{9});
  // (1, x + y) is not stabilized by the diagonal torus.
  CHECK_THROWS_AS(futaki_character_torus(Pair(form({1}), form({1, 1})), diagonal_torus_generators(2)),
                  std::invalid_argument);
}
