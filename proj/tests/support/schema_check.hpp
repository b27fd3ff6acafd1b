#ifndef SAXL_TESTS_SCHEMA_CHECK_HPP
#define SAXL_TESTS_SCHEMA_CHECK_HPP

/*
 * Minimal JSON-schema validator covering the subset used by the schemas
 * under docs/schema: type (string or list), required, properties,
 * additionalProperties (bool or schema), items, enum, and oneOf.
 * Returns a list of human-readable violations; empty means valid.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
}

inline void validate(const json& value, const json& schema, const std::string& where,
                     std::vector<std::string>& errors);

inline bool validate_quiet(const json& value, const json& schema) {
    std::vector<std::string> errs;
    validate(value, schema, "$", errs);
    return errs.empty();
}

inline void validate(const json& value, const json& schema, const std::string& where,
                     std::vector<std::string>& errors) {
    if (schema.is_boolean()) {
        if (!schema.get<bool>()) errors.push_back(where + ": disallowed by schema");
        return;
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& alt : schema["oneOf"])
            if (validate_quiet(value, alt)) ++hits;
        if (hits != 1)
            errors.push_back(where + ": matched " + std::to_string(hits) +
                             " oneOf alternatives (want exactly 1)");
        return;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) ok = type_matches(value, t.get<std::string>());
        else
            for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        if (!ok) {
            errors.push_back(where + ": wrong type (got " + std::string(value.type_name()) + ")");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || (alt == value);
        if (!ok) errors.push_back(where + ": value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(where + ": missing required key \"" +
                                     key.get<std::string>() + "\"");
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            const std::string sub = where + "." + it.key();
            if (props.contains(it.key())) {
                validate(it.value(), props[it.key()], sub, errors);
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>())
                    errors.push_back(sub + ": additional property not allowed");
                else if (!ap.is_boolean())
                    validate(it.value(), ap, sub, errors);
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i)
            validate(value[i], schema["items"], where + "[" + std::to_string(i) + "]", errors);
    }
}

inline json load_schema(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema " + path);
    json j;
    in >> j;
    return j;
}

inline std::vector<std::string> check_against(const std::string& schema_path, const json& value) {
    std::vector<std::string> errors;
    validate(value, load_schema(schema_path), "$", errors);
    return errors;
}

}  // namespace schema_check

#endif
