#include "json_schema.hpp"

#include <stdexcept>

namespace pairsuite::cli {

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "number") return v.is_number();
  if (t == "integer") {
    if (v.is_number_integer()) return true;
    return v.is_number_float() && v.get<double>() == static_cast<double>(static_cast<long long>(v.get<double>()));
  }
  throw std::invalid_argument("unsupported schema type '" + t + "'");
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void check(const json& schema, const json& v, const std::string& path, std::vector<std::string>& errs) const {
    if (schema.contains("$ref")) {
      check(resolve(schema["$ref"].get<std::string>()), v, path, errs);
      return;
    }
    if (schema.contains("type")) {
      const json& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = has_type(v, t.get<std::string>());
      } else {
        for (const auto& alt : t) ok = ok || has_type(v, alt.get<std::string>());
      }
      if (!ok) {
        errs.push_back(path + ": expected type " + t.dump());
        return;
      }
    }
    if (schema.contains("const") && v != schema["const"]) errs.push_back(path + ": expected " + schema["const"].dump());
    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& e : schema["enum"]) found = found || e == v;
      if (!found) errs.push_back(path + ": value not in enum");
    }
    if (v.is_number()) {
      if (schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>())
        errs.push_back(path + ": below minimum");
      if (schema.contains("maximum") && v.get<double>() > schema["maximum"].get<double>())
        errs.push_back(path + ": above maximum");
    }
    if (v.is_object()) {
      if (schema.contains("required")) {
        for (const auto& key : schema["required"])
          if (!v.contains(key.get<std::string>())) errs.push_back(path + ": missing '" + key.get<std::string>() + "'");
      }
      const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (props && props->contains(it.key())) {
          check((*props)[it.key()], it.value(), path + "." + it.key(), errs);
        } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
          errs.push_back(path + ": unexpected '" + it.key() + "'");
        }
      }
    }
    if (v.is_array()) {
      if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>())
        errs.push_back(path + ": too few items");
      if (schema.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(schema["items"], v[i], path + "[" + std::to_string(i) + "]", errs);
      }
    }
    if (schema.contains("oneOf")) {
      std::size_t matches = 0;
      for (const auto& alt : schema["oneOf"]) {
        std::vector<std::string> sub;
        check(alt, v, path, sub);
        matches += sub.empty();
      }
      if (matches != 1) errs.push_back(path + ": matches " + std::to_string(matches) + " oneOf branches, expected 1");
    }
  }

 private:
  const json& resolve(const std::string& ref) const {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref '" + ref + "'");
    return root_.at("definitions").at(ref.substr(prefix.size()));
  }

  const json& root_;
};

}  // namespace

std::vector<std::string> validate_json(const nlohmann::json& schema, const nlohmann::json& doc) {
  std::vector<std::string> errs;
  Validator(schema).check(schema, doc, "$", errs);
  return errs;
}

}  // namespace pairsuite::cli
