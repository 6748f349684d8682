#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and eagerly normalized rationals.
 *
 * Every sequence value and matrix entry in this library is exact. Integer
 * and Rational are the ground scalars; a Rational always keeps
 * gcd(num, den) = 1 and den > 0, so equality is plain structural equality.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace padmat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact quotient num/den in canonical form. Throws on den == 0.
inline Rational ratio(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// Canonical rendering: "p" when den == 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& v) { return v.str(); }

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline Rational rat_pow(Rational base, unsigned long long e) {
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

/// Parses "p", "-p" or "p/q"; the result is normalized. Throws
/// std::invalid_argument on malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> Integer {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        return Integer(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return ratio(std::move(num), std::move(den));
}

}  // namespace padmat
