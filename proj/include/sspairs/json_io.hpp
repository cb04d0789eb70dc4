#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"); plain JSON integers are
// accepted on input. Every top-level document carries "schema": "sspairs/1".

#include "sspairs/energy.hpp"
#include "sspairs/koszul.hpp"
#include "sspairs/pairs.hpp"
#include "sspairs/toric.hpp"

#include <json.hpp>

#include <string>

namespace sspairs {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "sspairs/1";

json to_json(const Rational& q);
json to_json(const RVector& v);
json to_json(const IVector& v);
json to_json(const RMatrix& m);
json to_json(const LatticePolytope& p);

Rational rational_from_json(const json& j, const std::string& where);
RVector rvector_from_json(const json& j, const std::string& where);
IVector ivector_from_json(const json& j, const std::string& where);
RMatrix rmatrix_from_json(const json& j, const std::string& where);
std::vector<IVector> ivectors_from_json(const json& j, const std::string& where);

/// {"N": n, "shape": "Sym(2)", "terms": [{"weight": [..], "coeff": "1"}, ...]}
/// Tensor modules key terms by "basis" instead of "weight".
json to_json(const WeightedVector& v);
WeightedVector weighted_vector_from_json(const json& j, const std::string& where);

/// {"schema": .., "v": {..}, "w": {..}}
json to_json(const Pair& p);
Pair pair_from_json(const json& j);

json to_json(const Verdict& v);
json to_json(const Characteristic& c);
json to_json(const EnergyProfile& p);
/// t,log_t2,nu with 17 significant digits.
std::string to_csv(const EnergyProfile& p);

/// {"dims": [..], "maps": [[[..]], ..]}
json to_json(const FiniteComplex& c);
FiniteComplex complex_from_json(const json& j);

/// A binary form from a JSON array or a comma-separated string, low to high.
BinaryForm binary_form_from_text(const std::string& text);

/// Parses a document; nlohmann parse errors carry the byte position.
json parse_document(const std::string& text);
json read_json_file(const std::string& path);

/// Compact, deterministic rendering (insertion-ordered keys).
std::string dump(const json& j);

}  // namespace sspairs
