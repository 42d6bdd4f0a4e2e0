#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rct {

// Time quantity in integer femtoseconds. All model arithmetic is exact
// integer arithmetic on this type; fractional results (means) appear only
// as Ratio.
struct TimeFs {
    std::int64_t fs = 0;

    constexpr TimeFs() = default;
    constexpr explicit TimeFs(std::int64_t v) : fs(v) {}

    friend constexpr TimeFs operator+(TimeFs a, TimeFs b) { return TimeFs{a.fs + b.fs}; }
    friend constexpr TimeFs operator-(TimeFs a, TimeFs b) { return TimeFs{a.fs - b.fs}; }
    constexpr TimeFs& operator+=(TimeFs o) { fs += o.fs; return *this; }
    constexpr TimeFs& operator-=(TimeFs o) { fs -= o.fs; return *this; }
    friend constexpr auto operator<=>(TimeFs a, TimeFs b) = default;
};

constexpr TimeFs abs(TimeFs t) { return TimeFs{t.fs < 0 ? -t.fs : t.fs}; }

// Exact rational, normalized (gcd 1, den > 0). Holds mean-of-absolute
// -difference costs whose numerators are femtosecond sums.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Ratio of(std::int64_t num, std::int64_t den);

    bool operator==(const Ratio&) const = default;
    bool operator<(const Ratio& o) const;
    bool operator<=(const Ratio& o) const { return *this == o || *this < o; }
};

// Nearest integer with ties to even. den must be positive.
std::int64_t round_half_even(std::int64_t num, std::int64_t den);

// Parse a decimal literal ("0.469", "67", "1.7e0") into an integer scaled
// by 10^scale_digits, exactly. Throws SchemaError (message prefixed with
// `path`) if the value has more fractional precision than the scale allows
// or does not fit in 64 bits.
std::int64_t parse_scaled_decimal(std::string_view text, int scale_digits,
                                  const std::string& path);

// Exact decimal rendering of a femtosecond value in ns ("0.469", "-1.5").
std::string format_ns(TimeFs t);

// Exact decimal rendering of a femtosecond value in ps ("67", "145.161").
std::string format_ps(TimeFs t);

// Exact decimal rendering of an attofarad value in fF ("162.375").
std::string format_ff(std::int64_t af);

} // namespace rct
