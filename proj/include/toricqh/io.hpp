#pragma once

// Polytope files and the built-in polytope library.
//
// File schema (offsets in units of π, as reduced fractions):
//   {"name": "...", "dim": n, "convention": "inward" | "outward",
//    "facets": [{"normal": [int, ...], "offset": [num, den]}, ...]}
// Inward facets read <x, normal> >= offset, outward ones <x, normal> <= offset.

#include "toricqh/polytope.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricqh {

/// "cp<n>" (n >= 1), "cp1xcp1", "blowup_cp3".
std::optional<Polytope> builtin_polytope(std::string_view name);
std::vector<std::string> builtin_names();

/// ParseError (with line and column) for malformed JSON, SchemaError (with the
/// offending field path) for well-formed JSON that does not match the schema.
Polytope polytope_from_text(std::string_view text);
Polytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& p);

/// A built-in name, or else a path to a polytope file.
Polytope load_polytope(const std::string& source);

/// "0", "π", "-π", "1/2·π", ...
std::string offset_symbolic(const Rat& r);

}  // namespace toricqh
