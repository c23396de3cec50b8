#pragma once

// Structural JSON-schema checker covering the subset the shipped schema
// documents use: type (string or union array), properties, required,
// items, and enum. Returns a path-annotated failure message, empty when
// the instance conforms.

#include <string>

#include "json.hpp"

namespace schemacheck {

inline bool type_matches(const nlohmann::json& instance, const std::string& type) {
  if (type == "object") return instance.is_object();
  if (type == "array") return instance.is_array();
  if (type == "string") return instance.is_string();
  if (type == "integer") return instance.is_number_integer();
  if (type == "number") return instance.is_number();
  if (type == "boolean") return instance.is_boolean();
  if (type == "null") return instance.is_null();
  return false;
}

inline std::string check(const nlohmann::json& schema, const nlohmann::json& instance,
                         const std::string& path = "$") {
  if (schema.contains("type")) {
    const auto& type = schema.at("type");
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(instance, type.get<std::string>());
    } else {
      for (const auto& t : type)
        if (type_matches(instance, t.get<std::string>())) ok = true;
    }
    if (!ok) return path + ": type mismatch (" + instance.dump() + ")";
  }
  if (schema.contains("enum") && !instance.is_null()) {
    bool ok = false;
    for (const auto& candidate : schema.at("enum"))
      if (candidate == instance) ok = true;
    if (!ok) return path + ": value not in enum (" + instance.dump() + ")";
  }
  if (instance.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required"))
        if (!instance.contains(key.get<std::string>()))
          return path + ": missing required key '" + key.get<std::string>() + "'";
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema.at("properties").items()) {
        if (!instance.contains(key)) continue;
        const std::string err = check(sub, instance.at(key), path + "." + key);
        if (!err.empty()) return err;
      }
    }
  }
  if (instance.is_array() && schema.contains("items")) {
    const auto& items = schema.at("items");
    for (std::size_t i = 0; i < instance.size(); ++i) {
      const std::string err =
          check(items, instance.at(i), path + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
    }
  }
  return {};
}

}  // namespace schemacheck
