#pragma once

#include <stdexcept>

namespace rct {

// Malformed input document, unknown field, bad value, or file I/O problem.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of a model contract (out-of-range tap index, unknown corner, ...).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search refused to run because it would exceed its guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rct
