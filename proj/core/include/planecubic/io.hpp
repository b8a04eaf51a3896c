#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planecubic/detrep.hpp"
#include "planecubic/discgroup.hpp"
#include "planecubic/fourfold.hpp"
#include "planecubic/lattice.hpp"

namespace planecubic::io {

using Json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both spellings are accepted on input. Every
// reader throws Error(kParseError) on malformed input.

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j);
std::vector<LatticeVector> vectors_from_json(const Json& j);

/// {"gram": [[...], ...]}
Json to_json(const Lattice& lattice);
/// Accepts {"gram": ...} or a bare nested array.
Lattice lattice_from_json(const Json& j);

/// {"orders": [...], "q": ["r/s", ...], "b": [["r/s", ...], ...]}
Json to_json(const FiniteQuadraticForm& form);
FiniteQuadraticForm finite_form_from_json(const Json& j);
Rational rational_from_string(const std::string& text);

/// {"gram": [[...]], "h2": [...], "p": [...]}; h2/p default to e1/e2.
Json to_json(const MarkedFourfold& m);
MarkedFourfold marked_from_json(const Json& j);

/// {"size": 4, "field": "Q" | "Fp:7", "entries": [["form", ...], ...]}
Json to_json(const FormMatrix& m);
FormMatrix form_matrix_from_json(const Json& j);

Json to_json(const ConditionReport& report);

/// Parses JSON text; wraps nlohmann errors as kParseError.
Json parse(const std::string& text);

}  // namespace planecubic::io
