#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "rct/errors.hpp"
#include "rct/time.hpp"

namespace rct {

// All documents use insertion-ordered JSON so that emitted reports are
// byte-stable across runs.
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

const Json& require_member(const Json& obj, const char* key, const std::string& path);
std::string require_string(const Json& obj, const char* key, const std::string& path);
std::int64_t require_int(const Json& obj, const char* key, const std::string& path);

// Accepts a JSON number or a decimal string and converts it exactly to an
// integer scaled by 10^scale_digits (6: ns -> fs, 3: ps -> fs / fF -> aF).
std::int64_t scaled_from_json(const Json& value, int scale_digits, const std::string& path);

} // namespace rct
