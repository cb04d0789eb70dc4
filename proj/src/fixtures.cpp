#include "sspairs/fixtures.hpp"

#include <stdexcept>

namespace sspairs::fixtures {

ModuleDescriptor xnil_module() { return ModuleDescriptor::parse(2, "Tensor(Sym(1),Wedge(2),Sym(1))"); }

namespace {

BasisKey unit(int i) {
  BasisKey k(3, 0);
  k[static_cast<std::size_t>(i - 1)] = 1;
  return k;
}

WeightedVector combine(const std::vector<std::pair<WeightedVector, Rational>>& parts) {
  std::map<BasisKey, Rational> terms;
  for (const auto& [x, c] : parts)
    for (const auto& [key, a] : x.terms()) terms[key] += c * a;
  return WeightedVector(parts.front().first.module(), terms);
}

}  // namespace

WeightedVector xnil_element(int i, int j, int k) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3) throw std::invalid_argument("xnil_element: indices in 1..3");
  static const BasisKey wedge[3] = {{1, 2}, {0, 2}, {0, 1}};
  const Rational sign = j == 2 ? -1 : 1;
  BasisKey key = unit(i);
  const auto& w = wedge[j - 1];
  key.insert(key.end(), w.begin(), w.end());
  const BasisKey tail = unit(k);
  key.insert(key.end(), tail.begin(), tail.end());
  return WeightedVector(xnil_module(), {{key, sign}});
}

WeightedVector xnil_xi310() { return xnil_element(1, 3, 1); }
WeightedVector xnil_xi220() { return combine({{xnil_element(2, 3, 1), 1}, {xnil_element(1, 3, 2), -1}}); }
WeightedVector xnil_e21_xi310() { return combine({{xnil_element(2, 3, 1), 1}, {xnil_element(1, 3, 2), 1}}); }
WeightedVector xnil_base() { return xnil_element(2, 3, 1); }

RMatrix xnil_sigma() {
  RMatrix s = RMatrix::identity(3);
  s(0, 1) = 1;
  return s;
}

Pair xnil_pair() { return Pair(xnil_xi220(), xnil_e21_xi310()); }

Pair quadric_pair() {
  const auto triv = ModuleDescriptor::trivial(1);
  const auto sym2 = ModuleDescriptor::sym(1, 2);
  return Pair(WeightedVector(triv, {{BasisKey{}, 1}}), WeightedVector::from_weights(sym2, {{{1, 1}, 1}}));
}

namespace {

json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w.canonical().coords()));
  return a;
}

json verdict_summary(const Pair& p, std::size_t samples, std::uint64_t seed) {
  const Verdict v = nss_check(p, samples, seed);
  json j = to_json(v);
  j.erase("schema");
  j["verified"] = verify_verdict(p, v);
  return j;
}

json sl3_xnil(std::size_t samples, std::uint64_t seed) {
  json out = json::object();
  out["schema"] = kSchema;
  out["example"] = "sl3-xnil";
  out["module"] = xnil_module().shape_string();

  const WeightedVector base = xnil_base();
  const Characteristic c = characteristic(base);
  json ch = to_json(c);
  ch.erase("schema");
  out["basepoint"] = to_json(base);
  out["basepoint_weights"] = weights_json(base.support());
  out["characteristic"] = std::move(ch);

  std::vector<Weight> gamma;
  for (const auto& chi : module_weights(xnil_module()))
    if (dot(c.h, chi.coords()) == 2) gamma.push_back(chi);
  out["gamma_face_module_weights"] = weights_json(gamma);

  const WeightedVector o = matrix_action(xnil_sigma(), base);
  const Cocharacter u(IVector{-1, 1, 0});
  out["o"] = to_json(o);
  out["o_weights"] = weights_json(o.support());
  out["degeneration_u"] = to_json(u.coords());
  out["degeneration_weight"] = weight_1ps(o, u);
  std::vector<Weight> limit;
  const long wmin = weight_1ps(o, u);
  for (const auto& chi : o.support())
    if (pairing(chi, u) == wmin) limit.push_back(chi);
  out["degeneration_limit_weights"] = weights_json(limit);

  const Pair p = xnil_pair();
  out["pair"] = to_json(p);
  out["pair"].erase("schema");
  out["pair_fixed_torus_semistable"] = nss_fixed_torus(p).semistable;
  out["pair_verdict"] = verdict_summary(p, samples, seed);
  const FutakiCharacter f = futaki_character_torus(p, diagonal_torus_generators(3));
  out["pair_futaki_character_zero"] = f.is_zero();
  return out;
}

json quadric_2x2(std::size_t samples, std::uint64_t seed) {
  json out = json::object();
  out["schema"] = kSchema;
  out["example"] = "quadric-2x2";
  const Pair p = quadric_pair();
  out["pair"] = to_json(p);
  out["pair"].erase("schema");
  out["fixed_torus_semistable"] = nss_fixed_torus(p).semistable;
  out["verdict"] = verdict_summary(p, samples, seed);
  const EnergyProfile prof = energy_along_1ps(p, Cocharacter(IVector{1, -1}), log_grid(1e-6));
  out["slope_along_u"] = json::object({{"u", {1, -1}}, {"slope", asymptotic_slope(prof)}, {"futaki_gen", futaki_gen(p, prof.u)}});
  return out;
}

json inaccessible_boundary() {
  const int d = 2;
  json out = json::object();
  out["schema"] = kSchema;
  out["example"] = "inaccessible-boundary";
  out["d"] = d;
  const auto triv = ModuleDescriptor::trivial(1);
  const auto sym = ModuleDescriptor::sym(1, d + 1);
  const Pair p(WeightedVector(triv, {{BasisKey{}, 1}}), WeightedVector::from_weights(sym, {{{d, 1}, 1}}));
  out["orbit_point"] = to_json(p);
  out["orbit_point"].erase("schema");

  // sigma(t) = [[t, t^-d], [0, t^-1]] in the convention g e_j = sum_i g(i, j) e_i.
  json curve = json::array();
  for (int k = 1; k <= 4; ++k) {
    Rational tk = 1;
    for (int i = 0; i < k; ++i) tk /= 10;
    RMatrix s(2, 2);
    s(0, 0) = tk;
    Rational tmd = 1;
    for (int i = 0; i < d; ++i) tmd /= tk;
    s(0, 1) = tmd;
    s(1, 1) = 1 / tk;
    const WeightedVector image = matrix_action(s, p.w);
    json pt = json::object();
    pt["t"] = to_string(tk);
    pt["trivial_part"] = "1";
    pt["form"] = to_json(image);
    curve.push_back(std::move(pt));
  }
  out["curve_sigma_t"] = std::move(curve);
  out["limit_point"] = json::object({{"trivial_part", "1"}, {"form_weight", {d + 1, 0}}});

  // A diagonal 1-PS fixes the limit line only if it pairs equally with the
  // trivial character and (d+1, 0); any u = (a, -a) pairs (d+1) a with the latter.
  const Cocharacter gen(IVector{1, -1});
  out["diagonal_1ps_fixing_limit"] = pairing(Weight(IVector{d + 1, 0}), gen) == 0;
  out["orbit_point_verdict"] = verdict_summary(p, 0, 0);
  return out;
}

json gkz() {
  json out = json::object();
  out["schema"] = kSchema;
  out["example"] = "gkz";
  json rows = json::array();
  for (int d = 2; d <= 4; ++d) {
    json r = json::object();
    r["d"] = d;
    json chow = json::array(), disc = json::array();
    for (const auto& v : chow_polytope_vertices(d)) chow.push_back(to_json(v));
    for (const auto& v : disc_polytope_vertices(d)) disc.push_back(to_json(v));
    r["chow_vertices"] = std::move(chow);
    r["disc_vertices"] = std::move(disc);
    const ScaledContainment sc = scaled_containment_check(d);
    r["scaled_containment"] = sc.contained;
    r["vertex_identity"] = sc.identity_holds;
    r["newton_polytope_matches"] = newton_polytope(symbolic_textbook_discriminant(d)) == hull(disc_polytope_vertices(d));
    rows.push_back(std::move(r));
  }
  out["degrees"] = std::move(rows);
  return out;
}

}  // namespace

std::vector<std::string> example_names() { return {"sl3-xnil", "quadric-2x2", "inaccessible-boundary", "gkz"}; }

json run_example(const std::string& name, std::size_t samples, std::uint64_t seed) {
  if (name == "sl3-xnil") return sl3_xnil(samples, seed);
  if (name == "quadric-2x2") return quadric_2x2(samples, seed);
  if (name == "inaccessible-boundary") return inaccessible_boundary();
  if (name == "gkz") return gkz();
  throw std::invalid_argument("unknown example \"" + name + "\"");
}

}  // namespace sspairs::fixtures
