#include "oracles.hpp"
#include "sspairs/energy.hpp"
#include "sspairs/fixtures.hpp"

#include <doctest.h>

#include <cmath>

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

CMatrix su2(double a, double b, double c) {
  // exp of a traceless anti-Hermitian matrix via a unit quaternion.
  const double n = std::sqrt(a * a + b * b + c * c);
  const double s = n == 0 ? 0 : std::sin(n) / n;
  const std::complex<double> alpha(std::cos(n), a * s), beta(b * s, c * s);
  CMatrix m(2, 2, 0.0);
  m(0, 0) = alpha;
  m(0, 1) = -std::conj(beta);
  m(1, 0) = beta;
  m(1, 1) = std::conj(alpha);
  return m;
}

}  // namespace

TEST_CASE("energy at the identity is the log ratio of norms") {
  const Pair p(form({1}), form({1, 2, 3}));
  CHECK(energy(p, RMatrix::identity(2)) == doctest::Approx(std::log(14.0)));
  const auto bomb = PairHermitian::standard(p, HermitianKind::Bombieri);
  CHECK(energy(p, RMatrix::identity(2), bomb) == doctest::Approx(std::log(1.0 + 2.0 + 9.0)));
  CHECK(bomb.w.basis_weight({1, 1}) == Rational(1, 2));
  CHECK_THROWS_AS(HermitianStructure(ModuleDescriptor::sym(2, 2), HermitianKind::Bombieri), std::invalid_argument);
}

TEST_CASE("Bombieri norms are SU(2)-invariant") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    IVector c(5);
    for (auto& x : c) x = rng.uniform_int(-3, 3);
    c[4] = 1;
    const Pair p(form({1, 1}), form(c));
    const auto h = PairHermitian::standard(p, HermitianKind::Bombieri);
    const CMatrix u = su2(rng.uniform_real() * 3, rng.uniform_real() * 3, rng.uniform_real() * 3);
    CHECK(energy(p, u, h) == doctest::Approx(energy(p, RMatrix::identity(2), h)).epsilon(1e-12));
  }
}

TEST_CASE("rational and complex evaluations agree") {
  Rng rng(8);
  const Pair p = fixtures::xnil_pair();
  for (int trial = 0; trial < 5; ++trial) {
    const RMatrix s = random_elementary_sl(rng, 3);
    CMatrix cs(3, 3, 0.0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) cs(i, j) = to_double(s(i, j));
    const auto h = PairHermitian::standard(p);
    CHECK(energy(p, cs, h) == doctest::Approx(energy(p, s, h)).epsilon(1e-10));
  }
}

TEST_CASE("automorphisms change the energy by the character") {
  // (1, x y): diag(t, 1/t) fixes both lines and the character is trivial.
  const Pair q = fixtures::quadric_pair();
  const RMatrix d = RMatrix::from_rows({{3, 0}, {0, Rational(1, 3)}});
  CHECK(energy(q, d) - energy(q, RMatrix::identity(2)) == doctest::Approx(0.0));
  // (1, x^2): the character is t^2, so the energy moves by log t^4.
  const Pair r(form({1}), form({0, 0, 1}));
  CHECK(energy(r, d) - energy(r, RMatrix::identity(2)) == doctest::Approx(std::log(81.0)));
  const auto ratio = futaki_character_torus(r, std::vector<RVector>{{3, Rational(1, 3)}});
  CHECK(energy(r, d) - energy(r, RMatrix::identity(2)) == doctest::Approx(2 * log_abs(ratio[0])));
}

TEST_CASE("Fubini-Study distances") {
  const CVector x{1.0, 0.0}, y{0.0, 1.0}, z{1.0, 1.0};
  CHECK(fs_distance(x, x) == doctest::Approx(0.0));
  CHECK(fs_distance(x, y) == doctest::Approx(M_PI / 2));
  CHECK(fs_distance(x, z) == doctest::Approx(M_PI / 4));
  CHECK(fs_distance(CVector{2.0, 0.0}, CVector{std::complex<double>(0, 5), 0.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fs_distance(x, CVector{0.0, 0.0}), std::domain_error);
}

TEST_CASE("energy equals log tan^2 of the distance to the V axis") {
  Rng rng(12);
  const Pair p(form({1, 1}), form({1, 0, 2, 1}));
  for (int trial = 0; trial < 20; ++trial) {
    const RMatrix s = random_elementary_sl(rng, 2);
    CHECK(distance_identity_residual(p, s, PairHermitian::standard(p)) < 1e-9);
    CHECK(distance_identity_residual(p, s, PairHermitian::standard(p, HermitianKind::Bombieri)) < 1e-9);
  }
  CHECK(distance_identity_residual(p, su2(0.3, 0.2, 0.1), PairHermitian::standard(p)) < 1e-9);
}

TEST_CASE("profiles along 1-PS match direct evaluation") {
  const Pair p(form({1, 1}), form({1, 0, 2, 1}));
  const Cocharacter u(IVector{1, -1});
  const auto prof = energy_along_1ps(p, u, {1.0, 0.5, 0.25});
  CHECK(prof.nu[0] == doctest::Approx(energy(p, RMatrix::identity(2))));
  CHECK(prof.nu[1] == doctest::Approx(energy(p, RMatrix::from_rows({{Rational(1, 2), 0}, {0, 2}}))));
  CHECK(prof.nu[2] == doctest::Approx(energy(p, RMatrix::from_rows({{Rational(1, 4), 0}, {0, 4}}))));
  CHECK_THROWS_AS(energy_along_1ps(p, u, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(energy_along_1ps(p, u, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(energy_along_1ps(p, u, {}), std::invalid_argument);
}

TEST_CASE("asymptotic slope recovers the Futaki invariant") {
  Rng rng(30);
  for (int trial = 0; trial < 20; ++trial) {
    IVector f(3), g(5);
    for (auto& x : f) x = rng.uniform_int(-3, 3);
    for (auto& x : g) x = rng.uniform_int(-3, 3);
    f[2] = g[4] = 1;
    const Pair p(form(f), form(g));
    const Cocharacter u(IVector{1, -1});
    const auto prof = energy_along_1ps(p, u, log_grid(1e-6));
    CHECK(std::abs(asymptotic_slope(prof) - static_cast<double>(futaki_gen(p, u))) < 1e-3);
  }
  const Pair q = fixtures::quadric_pair();
  CHECK_THROWS_AS(asymptotic_slope(energy_along_1ps(q, Cocharacter(IVector{1, -1}), {1.0, 0.5, 0.2})),
                  std::invalid_argument);
}

TEST_CASE("log grid") {
  const auto g = log_grid(1e-4, 1.0, 5);
  CHECK(g.size() == 5);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 1e-4);
  CHECK(g[2] == doctest::Approx(1e-2));
  CHECK_THROWS_AS(log_grid(0.0), std::invalid_argument);
}

TEST_CASE("sampled energy infimum is deterministic and below the identity value") {
  const Pair p(form({1}), form({1, 0, 1}));
  const auto h = PairHermitian::standard(p);
  const auto a = energy_infimum_sample(p, h, 30, 5);
  const auto b = energy_infimum_sample(p, h, 30, 5);
  CHECK(a.best == b.best);
  CHECK(a.evaluated == 31);
  CHECK(a.best <= energy(p, RMatrix::identity(2)));
}
