#pragma once

#include <boost/rational.hpp>
#include <charconv>
#include <string>
#include <string_view>

#include "rearrange/errors.hpp"

namespace rearrange {

// Exact arithmetic for weights, costs, and bounds. No floating point is used
// anywhere a cost is compared.
using Rational = boost::rational<long long>;

/// Canonical rendering: "p/q" in lowest terms, or just "p" when q == 1.
inline std::string format_rational(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "p" or "p/q" (q > 0).
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        long long value = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw ParseError("bad integer in rational: '" + std::string(s) + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw ParseError("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace rearrange
