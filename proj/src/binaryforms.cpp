#include "sspairs/binaryforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sspairs {

BinaryForm::BinaryForm(RVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; }))
    throw std::invalid_argument("zero form: a binary form needs a nonzero coefficient");
}

BinaryForm BinaryForm::from_ints(const IVector& coeffs) { return BinaryForm(to_rational(coeffs)); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  RVector c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return BinaryForm(std::move(c));
}

std::vector<OrdFactor> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<OrdFactor> out;
  if (f.degree() < 1) return out;
  const UPoly fp = f.derivative();
  const UPoly a0 = gcd(f, fp);
  UPoly b = exact_quotient(f, a0);
  UPoly c = exact_quotient(fp, a0);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    UPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (a.degree() >= 1) out.push_back({a.monic(), i});
  }
  return out;
}

OrdProfile ord_profile(const BinaryForm& f) {
  OrdProfile p;
  p.degree = f.degree();
  p.factors = squarefree_decomposition(f.affine());
  p.infinity = f.infinity_order();
  return p;
}

std::vector<RootClass> root_classes(const OrdProfile& f, const OrdProfile& g) {
  std::vector<RootClass> out;
  for (const auto& gi : g.factors) {
    UPoly rest = gi.factor;
    for (const auto& fj : f.factors) {
      UPoly common = gcd(rest, fj.factor);
      if (common.degree() < 1) continue;
      out.push_back({false, common, gi.multiplicity, fj.multiplicity});
      rest = exact_quotient(rest, common);
    }
    if (rest.degree() >= 1) out.push_back({false, rest.monic(), gi.multiplicity, 0});
  }
  if (g.infinity > 0) out.push_back({true, UPoly{}, g.infinity, f.infinity});
  return out;
}

Rational resultant(const BinaryForm& p, const BinaryForm& q) {
  return bareiss_determinant(sylvester_matrix(p.coeffs(), q.coeffs(), Rational(0)));
}

Rational discriminant(const BinaryForm& p) {
  const int d = p.degree();
  if (d < 2) throw std::invalid_argument("discriminant needs degree at least 2");
  if (p.coeffs().back() == 0) throw std::invalid_argument("discriminant needs a nonzero leading coefficient");
  RVector deriv(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) deriv[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return resultant(p, BinaryForm(std::move(deriv)));
}

std::optional<RootClass> sl2_violation(const BinaryForm& f, const BinaryForm& g) {
  const int e = f.degree();
  const int d = g.degree();
  if (e > d) throw std::invalid_argument("sl2_violation needs deg f <= deg g");
  for (auto& rc : root_classes(ord_profile(f), ord_profile(g))) {
    if (2 * (rc.ord_g - rc.ord_f) > d - e) return rc;
  }
  return std::nullopt;
}

bool sl2_pair_nss(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() > g.degree()) return false;
  return !sl2_violation(f, g).has_value();
}

IVector vertex_map(int d, const std::vector<int>& subset) {
  if (d < 1) throw std::invalid_argument("vertex_map needs d >= 1");
  IVector v(static_cast<std::size_t>(d) + 1, 0);
  if (subset.empty()) {
    v.front() = d;
    v.back() = d;
    return v;
  }
  std::vector<int> idx{0};
  for (int i : subset) {
    if (i < 1 || i > d - 1 || i <= idx.back()) throw std::invalid_argument("vertex_map: subset must be ascending in [1, d-1]");
    idx.push_back(i);
  }
  idx.push_back(d);
  const std::size_t k = subset.size();
  v[0] = idx[1];
  v[static_cast<std::size_t>(d)] = d - idx[k];
  for (std::size_t j = 1; j <= k; ++j) v[static_cast<std::size_t>(idx[j])] = idx[j + 1] - idx[j - 1];
  return v;
}

std::vector<IVector> chow_polytope_vertices(int d) {
  if (d < 1) throw std::invalid_argument("chow_polytope_vertices needs d >= 1");
  std::set<IVector> out;
  const int inner = d - 1;
  for (unsigned long mask = 0; mask < (1UL << inner); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < inner; ++i)
      if (mask & (1UL << i)) subset.push_back(i + 1);
    out.insert(vertex_map(d, subset));
  }
  return {out.begin(), out.end()};
}

std::vector<IVector> disc_polytope_vertices(int d) {
  if (d < 2) throw std::invalid_argument("disc_polytope_vertices needs d >= 2");
  std::vector<IVector> out;
  for (auto v : chow_polytope_vertices(d)) {
    v.front() -= 1;
    v.back() -= 1;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScaledContainment scaled_containment_check(int d) {
  if (d < 2) throw std::invalid_argument("scaled_containment_check needs d >= 2");
  const auto chow = chow_polytope_vertices(d);
  const auto disc = disc_polytope_vertices(d);
  const long deg_disc = 2L * d - 2;
  const long deg_res = 2L * d;

  ScaledContainment out;
  LatticePolytope lhs = hull(chow).scaled(Rational(deg_disc));
  LatticePolytope rhs = hull(disc).scaled(Rational(deg_res));
  out.contained = contains(rhs, lhs).contained;

  // (2d-2) v = ((d-1)/d) 2d (v - e_0 - e_d) + (1/d) 2d (d-1, 0, ..., 0, d-1)
  const std::set<IVector> disc_set(disc.begin(), disc.end());
  IVector corner(static_cast<std::size_t>(d) + 1, 0);
  corner.front() = corner.back() = d - 1;
  out.identity_holds = disc_set.count(corner) > 0;
  const Rational w1(d - 1, d);
  const Rational w2(1, d);
  for (const auto& v : chow) {
    IVector shifted = v;
    shifted.front() -= 1;
    shifted.back() -= 1;
    if (!disc_set.count(shifted)) out.identity_holds = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational lhs_i = Rational(deg_disc * v[i]);
      Rational rhs_i = w1 * deg_res * shifted[i] + w2 * deg_res * corner[i];
      if (lhs_i != rhs_i) out.identity_holds = false;
    }
  }
  return out;
}

long hyperdisc_degree(long n, long d, long dmu) {
  if (n < 1 || d < 2) throw std::invalid_argument("hyperdisc_degree needs n >= 1 and d >= 2");
  long deg = n * (n + 1) * d - dmu;
  if (deg <= 0) throw std::invalid_argument("hyperdiscriminant degree " + std::to_string(deg) + " is not positive");
  return deg;
}

PairDegrees normalize_pair_degrees(long n, long d, long dmu) {
  PairDegrees p;
  p.deg_discriminant = hyperdisc_degree(n, d, dmu);
  p.deg_resultant = d * (n + 1);
  p.common = p.deg_resultant * p.deg_discriminant;
  p.divisible_by_n = p.common % n == 0;
  p.divisible_by_n_plus_1 = p.common % (n + 1) == 0;
  return p;
}

MPoly symbolic_discriminant(int d) {
  if (d < 2 || d > 4) throw std::invalid_argument("symbolic_discriminant is capped at 2 <= d <= 4");
  const std::size_t nv = static_cast<std::size_t>(d) + 1;
  std::vector<MPoly> p, dp;
  for (int i = 0; i <= d; ++i) p.push_back(MPoly::variable(nv, static_cast<std::size_t>(i)));
  for (int i = 1; i <= d; ++i) dp.push_back(MPoly(nv, i) * p[static_cast<std::size_t>(i)]);
  return bareiss_determinant(sylvester_matrix(p, dp, MPoly(nv)), MPoly(nv, 1));
}

MPoly symbolic_textbook_discriminant(int d) {
  const std::size_t nv = static_cast<std::size_t>(d) + 1;
  const long sign = (d * (d - 1) / 2) % 2 ? -1 : 1;
  MPoly unit = MPoly(nv, sign) * MPoly::variable(nv, static_cast<std::size_t>(d));
  return exact_div(symbolic_discriminant(d), unit);
}

LatticePolytope newton_polytope(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Newton polytope of the zero polynomial");
  std::vector<IVector> pts;
  for (const auto& [e, c] : p.terms()) pts.emplace_back(e.begin(), e.end());
  return hull(pts);
}

}  // namespace sspairs
