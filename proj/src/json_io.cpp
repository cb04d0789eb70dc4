#include "sspairs/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sspairs {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IVector& v) {
  json a = json::array();
  for (long x : v) a.push_back(x);
  return a;
}

json to_json(const RMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const LatticePolytope& p) {
  json a = json::array();
  for (const auto& v : p.vertices()) a.push_back(to_json(v));
  return a;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational (integer or \"p/q\" string)");
}

RVector rvector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  RVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IVector ivector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  IVector out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail(where + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<long>());
  }
  return out;
}

RMatrix rmatrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  std::vector<RVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(rvector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  try {
    return RMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::vector<IVector> ivectors_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integer vectors");
  std::vector<IVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ivector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json(const WeightedVector& v) {
  const auto& m = v.module();
  json terms = json::array();
  for (const auto& [key, c] : v.terms()) {
    json t = json::object();
    if (m.kind() == ShapeKind::Tensor) t["basis"] = to_json(IVector(key.begin(), key.end()));
    else t["weight"] = to_json(weight_of(m, key).coords());
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  json j = json::object();
  j["N"] = m.rank();
  j["shape"] = m.shape_string();
  j["terms"] = std::move(terms);
  return j;
}

WeightedVector weighted_vector_from_json(const json& j, const std::string& where) {
  const json& n = field(j, "N", where);
  if (!n.is_number_integer() || n.get<long>() < 1) fail(where + ".N", "expected a positive integer");
  const json& shape = field(j, "shape", where);
  if (!shape.is_string()) fail(where + ".shape", "expected a string");
  ModuleDescriptor m = [&] {
    try {
      return ModuleDescriptor::parse(n.get<int>(), shape.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where + ".shape", e.what());
    }
  }();
  const json& terms = field(j, "terms", where);
  if (!terms.is_array() || terms.empty()) fail(where + ".terms", "expected a nonempty array");
  std::map<BasisKey, Rational> coeffs;
  std::vector<std::pair<IVector, Rational>> by_weight;
  bool any_basis = false, any_weight = false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + ".terms[" + std::to_string(i) + "]";
    const Rational c = rational_from_json(field(terms[i], "coeff", at), at + ".coeff");
    if (terms[i].contains("basis")) {
      any_basis = true;
      IVector k = ivector_from_json(terms[i]["basis"], at + ".basis");
      coeffs[BasisKey(k.begin(), k.end())] += c;
    } else if (terms[i].contains("weight")) {
      any_weight = true;
      by_weight.emplace_back(ivector_from_json(terms[i]["weight"], at + ".weight"), c);
    } else {
      fail(at, "each term needs \"weight\" or \"basis\"");
    }
  }
  if (any_basis && any_weight) fail(where + ".terms", "mixes \"weight\" and \"basis\" keys");
  try {
    if (any_weight) return WeightedVector::from_weights(m, by_weight);
    return WeightedVector(m, coeffs);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

json to_json(const Pair& p) {
  json j = json::object();
  j["schema"] = kSchema;
  j["v"] = to_json(p.v);
  j["w"] = to_json(p.w);
  return j;
}

Pair pair_from_json(const json& j) {
  WeightedVector v = weighted_vector_from_json(field(j, "v", "pair"), "pair.v");
  WeightedVector w = weighted_vector_from_json(field(j, "w", "pair"), "pair.w");
  try {
    return Pair(std::move(v), std::move(w));
  } catch (const std::invalid_argument& e) {
    fail("pair", e.what());
  }
}

json to_json(const Verdict& v) {
  json j = json::object();
  j["schema"] = kSchema;
  j["status"] = to_string(v.status);
  j["method"] = v.method;
  j["tori_tested"] = v.tori_tested;
  if (v.conjugator) j["conjugator"] = to_json(*v.conjugator);
  if (v.witness) j["witness"] = to_json(v.witness->coords());
  if (v.futaki) j["futaki_gen"] = std::to_string(*v.futaki);
  if (v.root_class) {
    json rc = json::object();
    rc["at_infinity"] = v.root_class->at_infinity;
    rc["points"] = v.root_class->at_infinity ? json("infinity") : json(v.root_class->points.to_string());
    rc["ord_g"] = v.root_class->ord_g;
    rc["ord_f"] = v.root_class->ord_f;
    j["root_class"] = std::move(rc);
  }
  return j;
}

json to_json(const Characteristic& c) {
  json j = json::object();
  j["schema"] = kSchema;
  j["chi_min"] = to_json(c.chi_min_canonical);
  j["chi_min_traceless"] = to_json(c.chi_min);
  j["squared_height"] = to_json(c.squared_height);
  j["height"] = c.height;
  j["h"] = to_json(c.h);
  j["h_dominant"] = to_json(c.h_dominant);
  return j;
}

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json to_json(const EnergyProfile& p) {
  json j = json::object();
  j["schema"] = kSchema;
  j["u"] = to_json(p.u.coords());
  json samples = json::array();
  for (std::size_t i = 0; i < p.t.size(); ++i) {
    json s = json::object();
    s["t"] = p.t[i];
    s["log_t2"] = p.log_t2(i);
    s["nu"] = p.nu[i];
    samples.push_back(std::move(s));
  }
  j["samples"] = std::move(samples);
  return j;
}

std::string to_csv(const EnergyProfile& p) {
  std::string out = "t,log_t2,nu\n";
  for (std::size_t i = 0; i < p.t.size(); ++i)
    out += fmt17(p.t[i]) + "," + fmt17(p.log_t2(i)) + "," + fmt17(p.nu[i]) + "\n";
  return out;
}

json to_json(const FiniteComplex& c) {
  json j = json::object();
  j["schema"] = kSchema;
  j["dims"] = c.dims();
  json maps = json::array();
  for (const auto& m : c.maps()) maps.push_back(to_json(m));
  j["maps"] = std::move(maps);
  return j;
}

FiniteComplex complex_from_json(const json& j) {
  const json& dims = field(j, "dims", "complex");
  IVector d = ivector_from_json(dims, "complex.dims");
  std::vector<std::size_t> sizes;
  for (long x : d) {
    if (x < 0) fail("complex.dims", "dimensions must be nonnegative");
    sizes.push_back(static_cast<std::size_t>(x));
  }
  const json& maps = field(j, "maps", "complex");
  if (!maps.is_array()) fail("complex.maps", "expected an array of matrices");
  std::vector<RMatrix> ms;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string at = "complex.maps[" + std::to_string(i) + "]";
    RMatrix m = rmatrix_from_json(maps[i], at);
    // A map touching the zero space may be written as [].
    if (i + 1 < sizes.size() && maps[i].empty() && (sizes[i] == 0 || sizes[i + 1] == 0))
      m = RMatrix(sizes[i + 1], sizes[i]);
    ms.push_back(std::move(m));
  }
  try {
    return FiniteComplex(std::move(sizes), std::move(ms));
  } catch (const std::invalid_argument& e) {
    fail("complex", e.what());
  }
}

BinaryForm binary_form_from_text(const std::string& text) {
  RVector coeffs;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    coeffs = rvector_from_json(parse_document(text), "form");
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto a = item.find_first_not_of(" \t");
      const auto b = item.find_last_not_of(" \t");
      if (a == std::string::npos) fail("form", "empty coefficient");
      coeffs.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
  }
  if (coeffs.empty()) fail("form", "no coefficients");
  try {
    return BinaryForm(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    fail("form", e.what());
  }
}

json parse_document(const std::string& text) { return json::parse(text); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sspairs
