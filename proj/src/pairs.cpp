#include "sspairs/pairs.hpp"

#include "sspairs/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sspairs {

Pair::Pair(WeightedVector v_, WeightedVector w_) : v(std::move(v_)), w(std::move(w_)) {
  if (v.module().rank() != w.module().rank())
    throw std::invalid_argument("pair: v and w must live over the same group SL(N+1)");
}

Pair conjugate(const RMatrix& sigma, const Pair& p) {
  return Pair(matrix_action(sigma, p.v), matrix_action(sigma, p.w));
}

long weight_1ps(const WeightedVector& v, const Cocharacter& u) {
  if (u.size() != v.module().ambient()) throw std::invalid_argument("weight_1ps: cocharacter length mismatch");
  const auto support = v.support();
  long best = pairing(support.front(), u);
  for (const auto& chi : support) best = std::min(best, pairing(chi, u));
  return best;
}

long futaki_gen(const Pair& p, const Cocharacter& u) { return weight_1ps(p.w, u) - weight_1ps(p.v, u); }

TorusCheck nss_fixed_torus(const Pair& p) {
  TorusCheck out;
  Containment c = contains(weight_polytope(p.w), weight_polytope(p.v));
  if (c.contained) return out;
  out.semistable = false;
  Cocharacter u = integral_cocharacter(c.separator);
  long f = futaki_gen(p, u);
  if (f <= 0) throw std::logic_error("nss_fixed_torus: separator did not produce a destabilizing cocharacter");
  out.witness = u;
  out.witness_futaki = f;
  return out;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Unstable: return "unstable";
    case VerdictStatus::NotRefuted: return "not_refuted";
    case VerdictStatus::ProvenSemistable: return "proven_semistable";
  }
  return "unknown";
}

bool is_binary_form_pair(const Pair& p) {
  auto ok = [](const ModuleDescriptor& m) {
    return m.rank() == 1 && (m.kind() == ShapeKind::Sym || m.kind() == ShapeKind::Trivial);
  };
  return ok(p.v.module()) && ok(p.w.module());
}

BinaryForm to_binary_form(const WeightedVector& v) {
  const auto& m = v.module();
  if (m.rank() != 1) throw std::invalid_argument("to_binary_form: module is not over SL(2)");
  if (m.kind() == ShapeKind::Trivial) return BinaryForm(RVector{v.terms().begin()->second});
  if (m.kind() != ShapeKind::Sym) throw std::invalid_argument("to_binary_form: module is not Sym(k)");
  RVector coeffs(static_cast<std::size_t>(m.degree()) + 1, Rational(0));
  for (const auto& [key, c] : v.terms()) coeffs[static_cast<std::size_t>(key[0])] = c;
  return BinaryForm(std::move(coeffs));
}

namespace {

RMatrix lower_shear(const Rational& beta) {
  RMatrix s = RMatrix::identity(2);
  s(1, 0) = beta;
  return s;
}

Verdict unstable_from_torus(const Pair& p, const RMatrix& sigma, const std::string& method, std::size_t tested) {
  const Pair q = conjugate(sigma, p);
  TorusCheck t = nss_fixed_torus(q);
  if (t.semistable) throw std::logic_error("expected a destabilized conjugate");
  Verdict v;
  v.status = VerdictStatus::Unstable;
  v.method = method;
  v.tori_tested = tested;
  v.conjugator = sigma;
  v.witness = t.witness;
  v.futaki = t.witness_futaki;
  return v;
}

Verdict decide_binary_forms(const Pair& p) {
  const BinaryForm f = to_binary_form(p.v);
  const BinaryForm g = to_binary_form(p.w);
  const std::string method = "sl2-root-orders";
  if (sl2_pair_nss(f, g)) {
    Verdict v;
    v.status = VerdictStatus::ProvenSemistable;
    v.method = method;
    return v;
  }
  if (f.degree() > g.degree()) {
    // Shear so that neither form vanishes at z = 0; then the endpoint of N(f)
    // at ord 0 sticks out of the shorter N(g).
    const UPoly fa = f.affine(), ga = g.affine();
    for (long b = 0;; ++b) {
      if (fa(Rational(b)) != 0 && ga(Rational(b)) != 0) return unstable_from_torus(p, lower_shear(Rational(b)), method, 1);
    }
  }
  RootClass bad = *sl2_violation(f, g);
  if (bad.at_infinity) return unstable_from_torus(p, RMatrix::identity(2), method, 1);
  RVector roots = rational_roots(bad.points);
  if (!roots.empty()) return unstable_from_torus(p, lower_shear(roots.front()), method, 1);
  Verdict v;
  v.status = VerdictStatus::Unstable;
  v.method = method;
  v.root_class = bad;
  return v;
}

}  // namespace

Verdict nss_check(const Pair& p, std::size_t samples, std::uint64_t seed, NssMode mode) {
  if (mode == NssMode::FixedTorusOnly) {
    TorusCheck t = nss_fixed_torus(p);
    if (!t.semistable) return unstable_from_torus(p, RMatrix::identity(p.ambient()), "fixed-torus", 1);
    Verdict v;
    v.status = VerdictStatus::ProvenSemistable;
    v.method = "fixed-torus";
    v.tori_tested = 1;
    return v;
  }
  if (is_binary_form_pair(p)) return decide_binary_forms(p);

  const std::size_t n = p.ambient();
  if (!nss_fixed_torus(p).semistable) return unstable_from_torus(p, RMatrix::identity(n), "torus-sweep", 1);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    RMatrix sigma = random_elementary_sl(rng, n);
    if (!nss_fixed_torus(conjugate(sigma, p)).semistable) return unstable_from_torus(p, sigma, "torus-sweep", s + 2);
  }
  Verdict v;
  v.status = VerdictStatus::NotRefuted;
  v.method = "torus-sweep";
  v.tori_tested = samples + 1;
  return v;
}

bool verify_verdict(const Pair& p, const Verdict& verdict) {
  switch (verdict.status) {
    case VerdictStatus::Unstable:
      if (verdict.conjugator && verdict.witness) {
        return futaki_gen(conjugate(*verdict.conjugator, p), *verdict.witness) > 0;
      }
      if (verdict.root_class && is_binary_form_pair(p)) {
        return !sl2_pair_nss(to_binary_form(p.v), to_binary_form(p.w));
      }
      return false;
    case VerdictStatus::ProvenSemistable:
      if (verdict.method == "sl2-root-orders") return sl2_pair_nss(to_binary_form(p.v), to_binary_form(p.w));
      if (verdict.method == "fixed-torus") return nss_fixed_torus(p).semistable;
      return false;
    case VerdictStatus::NotRefuted: return true;
  }
  return false;
}

Characteristic characteristic(const WeightedVector& v) {
  const LatticePolytope poly = weight_polytope(v);
  if (in_convex_hull(poly.vertices(), RVector(poly.ambient(), Rational(0))))
    throw std::domain_error("height zero: 0 lies in N(v), so v has no characteristic");
  MinNormPoint mnp = min_norm_point(poly);
  Characteristic c;
  c.chi_min = mnp.point;
  c.squared_height = mnp.squared_norm;
  c.height = std::sqrt(to_double(mnp.squared_norm));
  c.chi_min_canonical = c.chi_min;
  const Rational last = c.chi_min.back();
  for (auto& x : c.chi_min_canonical) x -= last;
  c.h = c.chi_min;
  for (auto& x : c.h) x = 2 * x / mnp.squared_norm;
  c.h_dominant = c.h;
  std::sort(c.h_dominant.begin(), c.h_dominant.end(), std::greater<>());
  return c;
}

std::vector<Weight> gamma_face(const WeightedVector& v, const RVector& h) {
  std::vector<Weight> out;
  for (const auto& chi : v.support())
    if (dot(h, chi.coords()) == 2) out.push_back(chi);
  return out;
}

bool FutakiCharacter::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](long x) { return x == 0; });
}

std::vector<Cocharacter> diagonal_torus_generators(std::size_t ambient) {
  std::vector<Cocharacter> gens;
  for (std::size_t i = 0; i + 1 < ambient; ++i) {
    IVector c(ambient, 0);
    c[i] = 1;
    c.back() = -1;
    gens.emplace_back(std::move(c));
  }
  return gens;
}

namespace {

long line_character(const WeightedVector& x, const Cocharacter& u, const char* name) {
  const auto support = x.support();
  const long value = pairing(support.front(), u);
  for (const auto& chi : support)
    if (pairing(chi, u) != value)
      throw std::invalid_argument(std::string("torus does not stabilize the line [") + name +
                                  "]: support weights pair unequally");
  return value;
}

Rational torus_value(const Weight& chi, const RVector& t) {
  Rational out = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    long e = chi.coords()[i];
    Rational base = e >= 0 ? t[i] : Rational(1 / t[i]);
    for (long k = 0; k < std::labs(e); ++k) out *= base;
  }
  return out;
}

Rational line_character(const WeightedVector& x, const RVector& t, const char* name) {
  const auto support = x.support();
  const Rational value = torus_value(support.front(), t);
  for (const auto& chi : support)
    if (torus_value(chi, t) != value)
      throw std::invalid_argument(std::string("torus element does not stabilize the line [") + name + "]");
  return value;
}

}  // namespace

FutakiCharacter futaki_character_torus(const Pair& p, const std::vector<Cocharacter>& generators) {
  FutakiCharacter out;
  const Weight chi_v = p.v.support().front();
  const Weight chi_w = p.w.support().front();
  IVector diff(p.ambient());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = chi_w.coords()[i] - chi_v.coords()[i];
  out.difference = Weight(diff);
  for (const auto& u : generators) {
    if (u.size() != p.ambient()) throw std::invalid_argument("futaki_character_torus: generator length mismatch");
    out.values.push_back(line_character(p.w, u, "w") - line_character(p.v, u, "v"));
  }
  return out;
}

std::vector<Rational> futaki_character_torus(const Pair& p, const std::vector<RVector>& diagonal_elements) {
  std::vector<Rational> out;
  for (const auto& t : diagonal_elements) {
    if (t.size() != p.ambient()) throw std::invalid_argument("futaki_character_torus: element length mismatch");
    Rational det = 1;
    for (const auto& x : t) {
      if (x == 0) throw std::invalid_argument("futaki_character_torus: singular torus element");
      det *= x;
    }
    if (det != 1) throw std::invalid_argument("futaki_character_torus: torus element is not in SL");
    out.push_back(line_character(p.w, t, "w") / line_character(p.v, t, "v"));
  }
  return out;
}

}  // namespace sspairs
