#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pickwick::io {

struct SchemaViolation {
  /// JSON pointer into the validated document.
  std::string pointer;
  std::string message;
};

/// Validates `doc` against a JSON Schema subset: type, enum, const,
/// properties, required, additionalProperties (bool), items, minItems,
/// maxItems, minimum, maximum, exclusiveMinimum, exclusiveMaximum, anyOf,
/// oneOf and local "$ref": "#/$defs/name".
std::vector<SchemaViolation> validate(const nlohmann::json& schema, const nlohmann::json& doc);

}  // namespace pickwick::io
