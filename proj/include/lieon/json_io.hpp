#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lieon/classical.hpp"
#include "lieon/disasm.hpp"

namespace lieon {

using Json = nlohmann::json;

// Malformed text or schema; line and column are 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line;
  std::size_t column;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
// Two-space indentation, sorted keys, trailing newline.
std::string dump_json(const Json& j);

// Indices are 1-based; coefficients are rational strings.
Json to_json(const StructureConstants& sc);
StructureConstants structure_from_json(const Json& j);
Json to_json(const AScheme& s);
AScheme scheme_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json to_json(const Subspace& s);
Json to_json(const Classification& c);
Json to_json(const SchemeReport& r);
Json to_json(const Census& c);

}  // namespace lieon
