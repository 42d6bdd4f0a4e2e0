#include "rct/time.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "rct/errors.hpp"

namespace rct {

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw ModelError("ratio with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Ratio{num, den};
}

bool Ratio::operator<(const Ratio& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::int64_t round_half_even(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    std::int64_t r = num % den;
    if (r == 0)
        return q;
    bool neg = num < 0;
    std::int64_t aq = neg ? -q : q;
    std::int64_t ar = neg ? -r : r;
    if (2 * ar > den || (2 * ar == den && (aq & 1)))
        aq += 1;
    return neg ? -aq : aq;
}

static std::int64_t pow10_i64(int n) {
    std::int64_t v = 1;
    while (n-- > 0)
        v *= 10;
    return v;
}

std::int64_t parse_scaled_decimal(std::string_view text, int scale_digits,
                                  const std::string& path) {
    auto fail = [&](const char* what) -> std::int64_t {
        throw SchemaError(path + ": " + what + " ('" + std::string(text) + "')");
    };

    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }

    std::string digits;
    int frac_digits = 0;
    bool saw_digit = false, saw_dot = false;
    for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
        if (text[i] == '.') {
            if (saw_dot)
                return fail("not a decimal number");
            saw_dot = true;
        } else {
            digits.push_back(text[i]);
            if (saw_dot)
                ++frac_digits;
            saw_digit = true;
        }
    }
    if (!saw_digit)
        return fail("not a decimal number");

    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i == text.size())
            return fail("not a decimal number");
        long e = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            e = e * 10 + (text[i] - '0');
            if (e > 10000)
                return fail("exponent out of range");
        }
        exp10 = eneg ? -e : e;
    }
    if (i != text.size())
        return fail("not a decimal number");

    long shift = exp10 - frac_digits + scale_digits;

    std::size_t nz = digits.find_first_not_of('0');
    if (nz == std::string::npos)
        return 0;
    digits.erase(0, nz);

    while (shift < 0 && digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
        ++shift;
    }
    if (shift < 0) {
        if (digits == "0")
            return 0;
        return fail("requires sub-femtosecond precision");
    }
    if (digits.size() + static_cast<std::size_t>(shift) > 18)
        return fail("out of range");

    std::int64_t mag = 0;
    for (char c : digits)
        mag = mag * 10 + (c - '0');
    mag *= pow10_i64(static_cast<int>(shift));
    return neg ? -mag : mag;
}

static std::string format_scaled(std::int64_t v, int scale_digits) {
    std::string sign = v < 0 ? "-" : "";
    unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v) : v;
    unsigned long long unit = 1;
    for (int i = 0; i < scale_digits; ++i)
        unit *= 10;
    std::string whole = std::to_string(mag / unit);
    std::string frac = std::to_string(mag % unit);
    frac.insert(0, static_cast<std::size_t>(scale_digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    return frac.empty() ? sign + whole : sign + whole + "." + frac;
}

std::string format_ns(TimeFs t) { return format_scaled(t.fs, 6); }

std::string format_ps(TimeFs t) { return format_scaled(t.fs, 3); }

std::string format_ff(std::int64_t af) { return format_scaled(af, 3); }

} // namespace rct
