#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "idemrep/boolean_module.hpp"
#include "idemrep/finite_group.hpp"
#include "idemrep/monomial.hpp"
#include "idemrep/oracle.hpp"
#include "idemrep/representation.hpp"
#include "idemrep/semifield.hpp"

// JSON encodings. Readers throw ParseError for malformed documents and
// ValidationError when a well-formed document describes an invalid object.

namespace idemrep::json_io {

using Json = nlohmann::ordered_json;

/// Boolean: 0 or 1. Tropical: {"t": "ninf"} or {"t": "q", "num": n, "den": d}
/// with d > 0 and the fraction in lowest terms.
Json to_json(const Value& v);
Value value_from_json(const Json& j, SemifieldTag tag);

/// {"order": n, "table": [[...]], "names": [...]}, plus "label" when set.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {"perm": [...], "scalars": [...]}
Json to_json(const MonomialMap& m);
MonomialMap monomial_from_json(const Json& j, SemifieldTag tag);

/// Nested row arrays.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, SemifieldTag tag);

/// {"group": ..., "tag": "B" | "T", "dim": n, "images": {"<element>": map}}
Json to_json(const Representation& v);
Representation representation_from_json(const Json& j);

/// {"size": m, "leq": [[0|1...]], "labels": [...]}; a B[G]-module adds
/// "group" and "action": {"<element>": [image of each element]}.
Json to_json(const FiniteBModule& m);
Json to_json(const BGModule& m);

struct LatticeDocument {
  FiniteBModule module;
  std::optional<BGModule> bg_module;
};

LatticeDocument lattice_from_json(const Json& j);

/// Omits elapsed_ms unless include_timing.
Json to_json(const oracle::OracleReport& r, bool include_timing);

/// Parses text; syntax errors become ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace idemrep::json_io
