#pragma once

#include <json.hpp>
#include <string>

#include "qtwo/symmatrix.hpp"

namespace qtwo {

// JSON form of a SymMatrix. The document is an object with
//   "order":   matrix order n
//   "mode":    "exact" or "float"
//   "scale":   {"num": p, "den": q, "rad": r}, omitted when the scale is 1
//   "field":   sorted prime radicands used by exact entries, omitted if none
//   "entries": the n*(n+1)/2 upper-triangle entries in row-major order
// Each entry is one of
//   {"rat": [p, q]}                    rational p/q
//   {"quad": {"<prod>": [p, q], ...}}  sum of (p/q)*sqrt(prod) terms
//   {"f": v}                           double, float mode only
// Exact matrices round-trip bit-exactly; floats round-trip by value.
nlohmann::json matrix_to_json(const SymMatrix& m);
SymMatrix matrix_from_json(const nlohmann::json& j);

// Reads and parses a JSON document, prefixing errors with the path.
nlohmann::json load_json_file(const std::string& path);
// Writes a JSON document with two-space indentation and a trailing newline.
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace qtwo
