#pragma once

#include <string>

#include <json.hpp>

#include "mrkit/cubic_algebra.hpp"
#include "mrkit/filters.hpp"
#include "mrkit/functors.hpp"

namespace mrkit {

using Json = nlohmann::ordered_json;

/// {"carrier", "one", "leq", "join", "delta", "labels"}; row-major,
/// -1 for undefined Delta.
Json to_json(const CubicAlgebra& algebra);
/// Throws Schema on missing or mistyped fields; table and axiom failures
/// surface as MalformedTable / AxiomViolation.
CubicAlgebra algebra_from_json(const Json& doc, Validation mode = Validation::Strict);
CubicTables tables_from_json(const Json& doc);

/// {"carrier", "one", "leq", "join", "implies", "labels", "classes"}.
Json to_json(const Quotient& q);
/// Sorted member indices.
Json to_json(const Filter& f);

Json read_json_file(const std::string& path);
/// Two-space indented, trailing newline.
void write_json_file(const std::string& path, const Json& doc);
std::string dump(const Json& doc);

}  // namespace mrkit
