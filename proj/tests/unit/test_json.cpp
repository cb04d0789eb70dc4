#include "sspairs/fixtures.hpp"
#include "sspairs/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <fstream>

using namespace sspairs;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_from_json(json(5), "x") == 5);
  CHECK(rational_from_json(json("7/14"), "x") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(json(0.5), "x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json("1/0"), "x"), std::invalid_argument);
}

TEST_CASE("pair round trip, Sym and Tensor") {
  for (const Pair& p : {fixtures::quadric_pair(), fixtures::xnil_pair()}) {
    const json j = to_json(p);
    CHECK(j["schema"] == kSchema);
    const Pair back = pair_from_json(parse_document(dump(j)));
    CHECK(back.v == p.v);
    CHECK(back.w == p.w);
  }
  const json t = to_json(fixtures::xnil_xi310());
  CHECK(t["terms"][0].contains("basis"));
  const json s = to_json(fixtures::quadric_pair().w);
  CHECK(s["terms"][0]["weight"] == json::array({1, 1}));
}

TEST_CASE("pair parsing errors carry a path") {
  const json ok = to_json(fixtures::quadric_pair());
  json bad = ok;
  bad["w"]["terms"][0]["weight"] = json::array({3, 0});
  CHECK(error_of([&] { pair_from_json(bad); }).rfind("pair.w", 0) == 0);
  bad = ok;
  bad["v"].erase("N");
  CHECK(error_of([&] { pair_from_json(bad); }).find("missing field \"N\"") != std::string::npos);
  bad = ok;
  bad["w"]["shape"] = "Sym(";
  CHECK(error_of([&] { pair_from_json(bad); }).rfind("pair.w.shape", 0) == 0);
  bad = ok;
  bad["w"]["N"] = 2;
  CHECK_THROWS_AS(pair_from_json(bad), std::invalid_argument);
  CHECK_THROWS(parse_document("{\"v\": "));
}

TEST_CASE("verdict encoding") {
  const Pair p(WeightedVector::from_weights(ModuleDescriptor::trivial(1), {{{0, 0}, 1}}),
               WeightedVector::from_weights(ModuleDescriptor::sym(1, 2), {{{2, 0}, 1}}));
  const json j = to_json(nss_check(p, 5, 1));
  CHECK(j["status"] == "unstable");
  CHECK(j["method"] == "sl2-root-orders");
  CHECK(j.contains("witness"));
  CHECK(j["futaki_gen"] == "2");
}

TEST_CASE("characteristic encoding") {
  const json j = to_json(characteristic(fixtures::xnil_base()));
  CHECK(j["chi_min"] == json::array({"2", "2", "0"}));
  CHECK(j["squared_height"] == "8/3");
  CHECK(j["h"] == json::array({"1/2", "1/2", "-1"}));
}

TEST_CASE("complex round trip") {
  const FiniteComplex c({1, 2, 1}, {RMatrix::from_rows({{1}, {2}}), RMatrix::from_rows({{-2, 1}})});
  const FiniteComplex back = complex_from_json(to_json(c));
  CHECK(back.dims() == c.dims());
  CHECK(back.maps() == c.maps());
  const json z = parse_document(R"({"dims": [0, 2, 2], "maps": [[], [[1, 0], [0, 1]]]})");
  CHECK(torsion(complex_from_json(z)) == 1);
  CHECK_THROWS_AS(complex_from_json(parse_document(R"({"dims": [1, 1], "maps": []})")), std::invalid_argument);
}

TEST_CASE("binary form text") {
  CHECK(binary_form_from_text("1, -2/3, 5").coeffs() == RVector{1, Rational(-2, 3), 5});
  CHECK(binary_form_from_text("[1, \"1/2\"]").coeffs() == RVector{1, Rational(1, 2)});
  CHECK_THROWS_AS(binary_form_from_text("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(binary_form_from_text("0,0"), std::invalid_argument);
}

TEST_CASE("energy profile CSV and JSON") {
  const Pair q = fixtures::quadric_pair();
  const auto prof = energy_along_1ps(q, Cocharacter(IVector{1, -1}), {1.0, 0.5});
  const std::string csv = to_csv(prof);
  CHECK(csv.rfind("t,log_t2,nu\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const json j = to_json(prof);
  CHECK(j["samples"].size() == 2);
}

TEST_CASE("files and determinism") {
  const std::string path = "test_json_tmp.json";
  {
    std::ofstream out(path);
    out << dump(to_json(fixtures::quadric_pair()));
  }
  const json j = read_json_file(path);
  std::remove(path.c_str());
  CHECK(dump(j) == dump(to_json(fixtures::quadric_pair())));
  CHECK_THROWS(read_json_file("does/not/exist.json"));
  CHECK(dump(fixtures::run_example("sl3-xnil", 10, 1)) == dump(fixtures::run_example("sl3-xnil", 10, 1)));
}
