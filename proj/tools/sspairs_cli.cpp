// sspairs command-line front end.
//
// Exit codes: 0 affirmative, 2 negative verdict (unstable, does not extend,
// containment fails), 1 input or precondition error.

#include "sspairs/fixtures.hpp"
#include "sspairs/json_io.hpp"
#include "sspairs/random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sspairs;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct Options {
  std::string output;
  std::uint64_t seed = 0;
  std::size_t samples = 50;

  std::string pair_path, vector_path, complex_path, a_path, b_path;
  std::string f_text, g_text, u_text, h0_text, example;
  std::vector<std::string> u_list, elements;
  bool fixed_torus_only = false, diagonal_torus = false, bombieri = false;
  int d = 2, m = -1;
  double tmin = 1e-6, tmax = 1.0;
  std::size_t points = 25;
  std::string format = "json";
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::invalid_argument("cannot write " + o.output);
  out << text;
}

int emit_json(const Options& o, const json& j, int code = kOk) {
  emit(o, dump(j));
  return code;
}

IVector parse_ints(const std::string& text, const std::string& what) {
  IVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": \"" + item + "\" is not an integer");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

RVector parse_rationals(const std::string& text, const std::string& what) {
  RVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
  }
  return out;
}

std::vector<IVector> read_points(const std::string& path, const std::string& what) {
  json j = read_json_file(path);
  if (j.is_object()) {
    if (!j.contains("points")) throw std::invalid_argument(what + ": expected an array or {\"points\": [...]}");
    j = j["points"];
  }
  return ivectors_from_json(j, what);
}

WeightedVector form_vector(const BinaryForm& f) {
  const auto m = ModuleDescriptor::sym(1, f.degree());
  std::vector<std::pair<IVector, Rational>> terms;
  for (int i = 0; i <= f.degree(); ++i) {
    const Rational& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0) terms.push_back({IVector{i, f.degree() - i}, c});
  }
  return WeightedVector::from_weights(m, terms);
}

int cmd_pair_check(const Options& o) {
  const Pair p = pair_from_json(read_json_file(o.pair_path));
  const Verdict v = nss_check(p, o.samples, o.seed, o.fixed_torus_only ? NssMode::FixedTorusOnly : NssMode::AllTori);
  json j = to_json(v);
  j["seed"] = std::to_string(o.seed);
  return emit_json(o, j, v.status == VerdictStatus::Unstable ? kNegative : kOk);
}

int cmd_pair_check_sl2(const Options& o) {
  const BinaryForm f = binary_form_from_text(o.f_text);
  const BinaryForm g = binary_form_from_text(o.g_text);
  const bool nss = sl2_pair_nss(f, g);
  const Pair p(form_vector(f), form_vector(g));
  const Verdict v = nss_check(p, 0, o.seed);
  json j = to_json(v);
  j["criterion"] = nss;
  j["deg_f"] = f.degree();
  j["deg_g"] = g.degree();
  return emit_json(o, j, nss ? kOk : kNegative);
}

int cmd_futaki(const Options& o) {
  const Pair p = pair_from_json(read_json_file(o.pair_path));
  json j = json::object();
  j["schema"] = kSchema;
  json rows = json::array();
  for (const auto& text : o.u_list) {
    const Cocharacter u(parse_ints(text, "--u"));
    json r = json::object();
    r["u"] = to_json(u.coords());
    r["weight_v"] = weight_1ps(p.v, u);
    r["weight_w"] = weight_1ps(p.w, u);
    r["futaki_gen"] = futaki_gen(p, u);
    rows.push_back(std::move(r));
  }
  if (!rows.empty()) j["cocharacters"] = std::move(rows);
  if (o.diagonal_torus) {
    const auto gens = diagonal_torus_generators(p.ambient());
    const FutakiCharacter f = futaki_character_torus(p, gens);
    json c = json::object();
    json g = json::array();
    for (const auto& u : gens) g.push_back(to_json(u.coords()));
    c["generators"] = std::move(g);
    c["difference"] = to_json(f.difference.canonical().coords());
    c["values"] = f.values;
    c["zero"] = f.is_zero();
    j["torus_character"] = std::move(c);
  }
  if (!o.elements.empty()) {
    std::vector<RVector> ts;
    for (const auto& e : o.elements) ts.push_back(parse_rationals(e, "--element"));
    json vals = json::array();
    for (const auto& x : futaki_character_torus(p, ts)) vals.push_back(to_json(x));
    j["element_values"] = std::move(vals);
  }
  return emit_json(o, j);
}

int cmd_characteristic(const Options& o) {
  const json doc = read_json_file(o.vector_path);
  const WeightedVector v = weighted_vector_from_json(doc.contains("vector") ? doc["vector"] : doc, "vector");
  const Characteristic c = characteristic(v);
  json j = to_json(c);
  json face = json::array();
  for (const auto& chi : gamma_face(v, c.h)) face.push_back(to_json(chi.canonical().coords()));
  j["gamma_face_support"] = std::move(face);
  return emit_json(o, j);
}

int cmd_energy_profile(const Options& o) {
  const Pair p = pair_from_json(read_json_file(o.pair_path));
  const Cocharacter u(parse_ints(o.u_text, "--u"));
  const PairHermitian h = PairHermitian::standard(p, o.bombieri ? HermitianKind::Bombieri : HermitianKind::WeightOrthonormal);
  const EnergyProfile prof = energy_along_1ps(p, u, log_grid(o.tmin, o.tmax, o.points), h);
  if (o.format == "csv") {
    emit(o, to_csv(prof));
    return kOk;
  }
  json j = to_json(prof);
  j["slope"] = asymptotic_slope(prof);
  j["futaki_gen"] = futaki_gen(p, u);
  return emit_json(o, j);
}

int cmd_toric_extend(const Options& o) {
  const ToricData data(read_points(o.a_path, "A"), read_points(o.b_path, "B"));
  const ExtensionResult r = extension_criterion(data);
  json j = json::object();
  j["schema"] = kSchema;
  j["extends"] = r.extends;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    long lhs = 0;
    for (const auto& b : data.b()) {
      long s = 0;
      for (std::size_t i = 0; i < b.size(); ++i) s += (*r.witness)[i] * b[i];
      lhs = std::min(lhs, s);
    }
    j["witness_min_0_B"] = lhs;
    j["witness_limit_support"] = json::array();
    for (const auto& a : boundary_witness(data.a(), *r.witness)) j["witness_limit_support"].push_back(to_json(a));
  }
  return emit_json(o, j, r.extends ? kOk : kNegative);
}

int cmd_resultant(const Options& o) {
  const BinaryForm f = binary_form_from_text(o.f_text);
  const BinaryForm g = binary_form_from_text(o.g_text);
  json j = json::object();
  j["schema"] = kSchema;
  j["m"] = f.degree();
  j["n"] = g.degree();
  j["resultant"] = to_json(resultant(f, g));
  return emit_json(o, j);
}

int cmd_discriminant(const Options& o) {
  const BinaryForm f = binary_form_from_text(o.f_text);
  const Rational disc = discriminant(f);
  const int d = f.degree();
  const Rational unit = ((d * (d - 1) / 2) % 2 ? -1 : 1) * f.coeffs().back();
  json j = json::object();
  j["schema"] = kSchema;
  j["d"] = d;
  j["discriminant"] = to_json(disc);
  j["textbook"] = to_json(Rational(disc / unit));
  return emit_json(o, j);
}

int cmd_vertices(const Options& o, bool chow) {
  const auto vs = chow ? chow_polytope_vertices(o.d) : disc_polytope_vertices(o.d);
  json j = json::object();
  j["schema"] = kSchema;
  j["d"] = o.d;
  j["vertices"] = json::array();
  for (const auto& v : vs) j["vertices"].push_back(to_json(v));
  return emit_json(o, j);
}

int cmd_scaled_containment(const Options& o) {
  const ScaledContainment sc = scaled_containment_check(o.d);
  json j = json::object();
  j["schema"] = kSchema;
  j["d"] = o.d;
  j["contained"] = sc.contained;
  j["identity_holds"] = sc.identity_holds;
  j["result"] = sc.ok();
  return emit_json(o, j, sc.ok() ? kOk : kNegative);
}

int cmd_torsion(const Options& o) {
  const FiniteComplex c = complex_from_json(read_json_file(o.complex_path));
  json j = json::object();
  j["schema"] = kSchema;
  j["dims"] = c.dims();
  j["ranks"] = c.ranks();
  j["exact"] = c.is_exact();
  j["torsion"] = to_json(torsion(c));
  return emit_json(o, j);
}

int cmd_koszul_resultant(const Options& o) {
  const BinaryForm f = binary_form_from_text(o.f_text);
  const BinaryForm g = binary_form_from_text(o.g_text);
  const int m = o.m >= 0 ? o.m : 2 * f.degree() - 1;
  const Rational t = koszul_resultant(f, g, m);
  const Rational r = resultant(f, g);
  json j = json::object();
  j["schema"] = kSchema;
  j["m"] = m;
  j["torsion"] = to_json(t);
  j["resultant"] = to_json(r);
  j["magnitudes_equal"] = abs(t) == abs(r);
  return emit_json(o, j);
}

int cmd_euler_degree(const Options& o) {
  const IVector h0 = parse_ints(o.h0_text, "--h0");
  json j = json::object();
  j["schema"] = kSchema;
  j["h0"] = to_json(h0);
  j["degree"] = weighted_euler_degree(std::vector<long>(h0.begin(), h0.end()));
  return emit_json(o, j);
}

int cmd_examples(const Options& o) {
  if (o.example.empty()) {
    json j = json::object();
    j["schema"] = kSchema;
    j["examples"] = fixtures::example_names();
    return emit_json(o, j);
  }
  return emit_json(o, fixtures::run_example(o.example, o.samples, o.seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sspairs: semistable pairs, resultants and torsion"};
  app.require_subcommand(1);
  Options o;
  std::string seed_text;
  app.add_option("--seed", seed_text, "PRNG seed (default: $SSPAIRS_SEED or 20240917)");
  app.add_option("-o,--output", o.output, "Write the result to a file instead of stdout");

  auto* pc = app.add_subcommand("pair-check", "Numerical semistability of a pair");
  pc->add_option("--pair", o.pair_path, "Pair JSON")->required();
  pc->add_option("--samples", o.samples, "Random conjugate tori to test");
  pc->add_flag("--fixed-torus-only", o.fixed_torus_only, "Decide for the diagonal torus only");

  auto* sl2 = app.add_subcommand("pair-check-sl2", "SL(2) criterion for a pair of binary forms");
  sl2->add_option("--f", o.f_text, "Coefficients of f, low to high")->required();
  sl2->add_option("--g", o.g_text, "Coefficients of g, low to high")->required();

  auto* fut = app.add_subcommand("futaki", "1-PS weights and Futaki characters");
  fut->add_option("--pair", o.pair_path, "Pair JSON")->required();
  fut->add_option("--u", o.u_list, "Cocharacter, comma separated (repeatable)");
  fut->add_flag("--diagonal-torus", o.diagonal_torus, "Character on the full diagonal torus");
  fut->add_option("--element", o.elements, "Diagonal torus element, comma separated rationals (repeatable)");

  auto* ch = app.add_subcommand("characteristic", "Popov-Vinberg characteristic of a vector");
  ch->add_option("--vector", o.vector_path, "Weighted vector JSON")->required();

  auto* en = app.add_subcommand("energy-profile", "Energy of a pair along a 1-PS");
  en->add_option("--pair", o.pair_path, "Pair JSON")->required();
  en->add_option("--u", o.u_text, "Cocharacter, comma separated")->required();
  en->add_option("--tmin", o.tmin, "Smallest t");
  en->add_option("--tmax", o.tmax, "Largest t");
  en->add_option("--points", o.points, "Grid size");
  en->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  en->add_flag("--bombieri", o.bombieri, "Bombieri norms (Sym(d) of SL(2) only)");

  auto* te = app.add_subcommand("toric-extend", "Toric extension criterion");
  te->add_option("--A", o.a_path, "Characters A (JSON)")->required();
  te->add_option("--B", o.b_path, "Characters B (JSON)")->required();

  auto* res = app.add_subcommand("resultant", "Sylvester resultant of two forms");
  res->add_option("--f", o.f_text, "Coefficients of P, low to high")->required();
  res->add_option("--g", o.g_text, "Coefficients of Q, low to high")->required();

  auto* disc = app.add_subcommand("discriminant", "R(P, P') of a form");
  disc->add_option("--f", o.f_text, "Coefficients of P, low to high")->required();

  auto* cp = app.add_subcommand("chow-polytope", "Vertices of the Chow polytope");
  cp->add_option("--d", o.d, "Degree")->required();
  auto* dp = app.add_subcommand("disc-polytope", "Vertices of the discriminant polytope");
  dp->add_option("--d", o.d, "Degree")->required();
  auto* sc = app.add_subcommand("scaled-containment", "deg(D) N(R) inside deg(R) N(D)");
  sc->add_option("--d", o.d, "Degree")->required();

  auto* tor = app.add_subcommand("torsion", "Torsion of an exact complex");
  tor->add_option("--complex", o.complex_path, "Complex JSON")->required();

  auto* kr = app.add_subcommand("koszul-resultant", "Resultant as the torsion of a Koszul complex");
  kr->add_option("--f", o.f_text, "Coefficients of f, low to high")->required();
  kr->add_option("--g", o.g_text, "Coefficients of g, low to high")->required();
  kr->add_option("--m", o.m, "Twist, at least 2d-1 (default 2d-1)");

  auto* eu = app.add_subcommand("euler-degree", "Weighted Euler characteristic of h0 data");
  eu->add_option("--h0", o.h0_text, "h0 values for j = 0..n+1, comma separated")->required();

  auto* ex = app.add_subcommand("examples", "Worked examples");
  ex->add_option("name", o.example, "Example name (omit to list)");
  ex->add_option("--samples", o.samples, "Random conjugate tori for pair verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    o.seed = seed_text.empty() ? default_seed() : std::stoull(seed_text);
    if (*pc) return cmd_pair_check(o);
    if (*sl2) return cmd_pair_check_sl2(o);
    if (*fut) return cmd_futaki(o);
    if (*ch) return cmd_characteristic(o);
    if (*en) return cmd_energy_profile(o);
    if (*te) return cmd_toric_extend(o);
    if (*res) return cmd_resultant(o);
    if (*disc) return cmd_discriminant(o);
    if (*cp) return cmd_vertices(o, true);
    if (*dp) return cmd_vertices(o, false);
    if (*sc) return cmd_scaled_containment(o);
    if (*tor) return cmd_torsion(o);
    if (*kr) return cmd_koszul_resultant(o);
    if (*eu) return cmd_euler_degree(o);
    if (*ex) return cmd_examples(o);
  } catch (const json::parse_error& e) {
    std::cerr << name << ": malformed JSON: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << name << ": " << e.what() << "\n";
    return kError;
  }
  return kError;
}
