#pragma once

#include "qisg/biretraction.hpp"

#include <nlohmann/json.hpp>

#include <variant>

namespace qisg {

/// Semantic errors in structure files; `where` is a JSON-pointer-style path.
struct StructureError : std::runtime_error {
  std::string where;
  StructureError(std::string where_, const std::string& what_)
      : std::runtime_error(where_ + ": " + what_), where(std::move(where_)) {}
};

/// One self-describing format with a "kind" discriminator; scalars are
/// strings "p/q" (or plain integers / decimals).
struct StructureFile {
  std::string kind;
  std::variant<FinSemigroup, FinGroupoid, FinAlgebra, Qisg, HopfAlgebroid> value;
};

StructureFile parse_structure(const nlohmann::json& j);
/// Parses text; JSON syntax errors carry the byte position, semantic errors
/// the JSON path.
StructureFile parse_structure_text(const std::string& text);

nlohmann::json serialize(const FinSemigroup& s);
nlohmann::json serialize(const FinGroupoid& g);
nlohmann::json serialize(const FinAlgebra& a);
nlohmann::json serialize(const Qisg& q);
nlohmann::json serialize(const HopfAlgebroid& x);
nlohmann::json serialize_structure(const StructureFile& f);

/// Built-in model registry used by biretraction descriptors and the CLI:
/// {"name": "pair"|"repfun"|"weakhopf", "points": n, "group": "Z2"}.
HopfAlgebroid model_from_json(const nlohmann::json& j);

struct BrtDescriptor {
  nlohmann::json model;
  LinMap alpha;
};

BrtDescriptor parse_biretraction_descriptor(const nlohmann::json& j, const HopfAlgebroid& model);
nlohmann::json model_json(const nlohmann::json& j);
nlohmann::json serialize_biretraction(const nlohmann::json& model, const Biretraction& b);

nlohmann::json report_json(const Report& rep, const std::string& command);
std::string report_text(const Report& rep, double elapsed_ms);

}  // namespace qisg
