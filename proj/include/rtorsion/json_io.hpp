#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/unipoly.hpp"

namespace rtorsion {

using Json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [[[e1, e2, ...], "coeff"], ...]}, terms in the
/// canonical (graded lex, descending) order.
Json to_json(const MultiPoly& p);
Json to_json(const UniPoly& p);
/// Inverse of to_json(MultiPoly); throws ParseError on malformed input.
MultiPoly multipoly_from_json(const Json& j);

/// Decimal string with `digits` significant digits; negative zero prints as 0.
std::string real_to_string(const Real& x, int digits = 30);
/// {"re": "...", "im": "..."}
Json to_json(const Complex& z, int digits = 30);

/// Text and JSON form together: {"text": "...", "json": {...}}.
Json poly_entry(const MultiPoly& p);
Json poly_entry(const UniPoly& p);

}  // namespace rtorsion
