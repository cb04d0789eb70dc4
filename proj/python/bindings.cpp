#include "sspairs/fixtures.hpp"
#include "sspairs/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace sspairs;

namespace {

BinaryForm form(const std::vector<std::string>& coeffs) {
  RVector c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return BinaryForm(std::move(c));
}

std::string pair_check(const std::string& pair_json, std::size_t samples, std::uint64_t seed, bool fixed_torus_only) {
  const Pair p = pair_from_json(parse_document(pair_json));
  const Verdict v = nss_check(p, samples, seed, fixed_torus_only ? NssMode::FixedTorusOnly : NssMode::AllTori);
  json j = to_json(v);
  j["verified"] = verify_verdict(p, v);
  return j.dump();
}

std::string characteristic_json(const std::string& vector_json) {
  return to_json(characteristic(weighted_vector_from_json(parse_document(vector_json), "vector"))).dump();
}

long futaki(const std::string& pair_json, const std::vector<long>& u) {
  return futaki_gen(pair_from_json(parse_document(pair_json)), Cocharacter(IVector(u.begin(), u.end())));
}

std::string energy_profile(const std::string& pair_json, const std::vector<long>& u, double tmin, std::size_t points) {
  const Pair p = pair_from_json(parse_document(pair_json));
  const Cocharacter c(IVector(u.begin(), u.end()));
  const EnergyProfile prof = energy_along_1ps(p, c, log_grid(tmin, 1.0, points));
  json j = to_json(prof);
  j["slope"] = asymptotic_slope(prof);
  j["futaki_gen"] = futaki_gen(p, c);
  return j.dump();
}

std::pair<bool, std::optional<std::vector<long>>> toric_extend(const std::vector<std::vector<long>>& a,
                                                               const std::vector<std::vector<long>>& b) {
  const ExtensionResult r = extension_criterion(ToricData(a, b));
  if (r.witness) return {r.extends, std::vector<long>(r.witness->begin(), r.witness->end())};
  return {r.extends, std::nullopt};
}

std::string torsion_json(const std::string& complex_json) {
  return to_string(torsion(complex_from_json(parse_document(complex_json))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact semistability tests for pairs, resultants, GKZ polytopes and Koszul torsion.";

  py::register_exception<std::domain_error>(m, "PreconditionError", PyExc_ValueError);

  m.def("resultant", [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
    return to_string(resultant(form(f), form(g)));
  }, py::arg("f"), py::arg("g"), "Sylvester resultant; coefficients low to high as strings.");
  m.def("discriminant", [](const std::vector<std::string>& f) { return to_string(discriminant(form(f))); },
        py::arg("f"), "R(P, P').");
  m.def("koszul_resultant", [](const std::vector<std::string>& f, const std::vector<std::string>& g, int mm) {
    return to_string(koszul_resultant(form(f), form(g), mm));
  }, py::arg("f"), py::arg("g"), py::arg("m"));
  m.def("sl2_pair_nss", [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
    return sl2_pair_nss(form(f), form(g));
  }, py::arg("f"), py::arg("g"));
  m.def("chow_polytope_vertices", [](int d) { return chow_polytope_vertices(d); }, py::arg("d"));
  m.def("disc_polytope_vertices", [](int d) { return disc_polytope_vertices(d); }, py::arg("d"));
  m.def("scaled_containment", [](int d) { return scaled_containment_check(d).ok(); }, py::arg("d"));
  m.def("weighted_euler_degree", &weighted_euler_degree, py::arg("h0"));
  m.def("pair_check", &pair_check, py::arg("pair_json"), py::arg("samples") = 50,
        py::arg("seed") = 20240917ULL, py::arg("fixed_torus_only") = false);
  m.def("characteristic", &characteristic_json, py::arg("vector_json"));
  m.def("futaki_gen", &futaki, py::arg("pair_json"), py::arg("u"));
  m.def("energy_profile", &energy_profile, py::arg("pair_json"), py::arg("u"), py::arg("tmin") = 1e-6,
        py::arg("points") = 25);
  m.def("toric_extend", &toric_extend, py::arg("A"), py::arg("B"));
  m.def("torsion", &torsion_json, py::arg("complex_json"));
  m.def("run_example", [](const std::string& name, std::size_t samples, std::uint64_t seed) {
    return fixtures::run_example(name, samples, seed).dump();
  }, py::arg("name"), py::arg("samples") = 50, py::arg("seed") = 20240917ULL);
  m.def("example_names", &fixtures::example_names);
}
