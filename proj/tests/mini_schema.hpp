#pragma once

// Structural validator for the subset of JSON Schema the schemas/ files
// use: type (string or list), required, properties, items, enum, and
// local $ref into #/definitions. Returns every violation found.

#include <string>
#include <vector>

#include <json.hpp>

namespace mini_schema {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    return false;
}

inline void validate_node(const json& root, const json& schema, const json& value,
                          const std::string& path, std::vector<std::string>& errors) {
    if (schema.contains("$ref")) {
        std::string ref = schema.at("$ref").get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            errors.push_back(path + ": unsupported $ref " + ref);
            return;
        }
        validate_node(root, root.at("definitions").at(ref.substr(prefix.size())), value,
                      path, errors);
        return;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const json& option : schema.at("enum")) {
            found = found || option == value;
        }
        if (!found) {
            errors.push_back(path + ": value " + value.dump() + " not in enum");
        }
        return;
    }
    if (schema.contains("type")) {
        const json& type = schema.at("type");
        bool ok = false;
        if (type.is_array()) {
            for (const json& t : type) {
                ok = ok || type_matches(t.get<std::string>(), value);
            }
        } else {
            ok = type_matches(type.get<std::string>(), value);
        }
        if (!ok) {
            errors.push_back(path + ": expected type " + type.dump() + ", got " +
                             value.dump().substr(0, 40));
            return;
        }
    }
    if (schema.contains("required") && value.is_object()) {
        for (const json& key : schema.at("required")) {
            if (!value.contains(key.get<std::string>())) {
                errors.push_back(path + ": missing required key " + key.get<std::string>());
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema.at("properties").items()) {
            if (value.contains(key)) {
                validate_node(root, sub, value.at(key), path + "/" + key, errors);
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        std::size_t i = 0;
        for (const json& element : value) {
            validate_node(root, schema.at("items"), element,
                          path + "/" + std::to_string(i++), errors);
        }
    }
}

inline std::vector<std::string> validate(const json& schema, const json& value) {
    std::vector<std::string> errors;
    validate_node(schema, schema, value, "", errors);
    return errors;
}

}  // namespace mini_schema
