#include "rct/json_util.hpp"

#include <charconv>
#include <fstream>

namespace rct {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(path + ": invalid JSON: " + e.what());
    }
    return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw SchemaError("cannot open file for writing: " + path);
    out << text;
    if (!out)
        throw SchemaError("write failed: " + path);
}

const Json& require_member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object())
        throw SchemaError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw SchemaError(path + ": missing field '" + key + "'");
    return *it;
}

std::string require_string(const Json& obj, const char* key, const std::string& path) {
    const Json& v = require_member(obj, key, path);
    if (!v.is_string())
        throw SchemaError(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

std::int64_t require_int(const Json& obj, const char* key, const std::string& path) {
    const Json& v = require_member(obj, key, path);
    if (!v.is_number_integer())
        throw SchemaError(path + "." + key + ": expected an integer");
    return v.get<std::int64_t>();
}

std::int64_t scaled_from_json(const Json& value, int scale_digits, const std::string& path) {
    if (value.is_string())
        return parse_scaled_decimal(value.get<std::string>(), scale_digits, path);
    if (value.is_number_integer())
        return parse_scaled_decimal(std::to_string(value.get<std::int64_t>()), scale_digits, path);
    if (value.is_number_float()) {
        // Render the double at shortest round-trip precision; this recovers
        // the literal the document author wrote for anything that is not
        // deliberately pathological, and the exact decimal parse rejects
        // anything that would lose femtosecond precision.
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, value.get<double>());
        return parse_scaled_decimal(std::string_view(buf, res.ptr - buf), scale_digits, path);
    }
    throw SchemaError(path + ": expected a number");
}

} // namespace rct
