#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pairsuite::cli {

/// Validates `doc` against a JSON Schema using the subset of draft-07 that
/// docs/output.schema.json relies on: type, enum, const, properties,
/// required, additionalProperties (boolean), items, minItems, minimum,
/// maximum, pattern-free strings, oneOf, and local "#/definitions/..." refs.
/// Returns one message per violation; empty means valid.
std::vector<std::string> validate_json(const nlohmann::json& schema, const nlohmann::json& doc);

}  // namespace pairsuite::cli
