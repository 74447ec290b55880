#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "powser/errors.hpp"

namespace powser {

/// Arbitrary-precision signed integer.
using bigint = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with positive denominator.
/// This is the coefficient domain for every algorithm in the library.
using rational = boost::multiprecision::cpp_rational;

/// Build a rational from numerator/denominator, normalizing the sign onto
/// the numerator. Throws non_invertible_error on a zero denominator.
inline rational make_rational(bigint num, bigint den) {
    if (den == 0)
        throw non_invertible_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return rational(std::move(num), std::move(den));
}

inline bool is_integer(const rational& r) { return denominator(r) == 1; }

/// Exact integer value of r; throws if r is not an integer.
inline bigint to_integer(const rational& r) {
    if (!is_integer(r))
        throw std::invalid_argument("expected integer rational, got denominator != 1");
    return numerator(r);
}

inline bigint pow_int(const bigint& base, unsigned long long e) {
    bigint acc(1), b(base);
    while (e) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return acc;
}

/// base^e for any integer e, with 0^0 = 1. A negative exponent of zero
/// throws non_invertible_error.
inline rational pow_rational(const rational& base, long long e) {
    if (e == 0) return rational(1);
    if (base == 0) {
        if (e < 0)
            throw non_invertible_error("negative power of zero");
        return rational(0);
    }
    const bool neg = e < 0;
    const unsigned long long m =
        neg ? ~static_cast<unsigned long long>(e) + 1ULL : static_cast<unsigned long long>(e);
    bigint num = pow_int(numerator(base), m);
    bigint den = pow_int(denominator(base), m);
    if (neg) num.swap(den);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    // num/den are coprime already (powers of a reduced fraction).
    return rational(num, den);
}

/// Canonical rendering: "p" when the denominator is 1, else "p/q",
/// lowest terms, minus sign on the numerator.
inline std::string to_string(const rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace detail {
inline bigint parse_decimal(std::string_view text, std::string_view whole) {
    if (text.empty())
        throw parse_error("empty integer in rational literal '" + std::string(whole) + "'");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw parse_error("missing digits in rational literal '" + std::string(whole) + "'");
    bigint v(0);
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("bad character in rational literal '" + std::string(whole) + "'");
        v = v * 10 + (text[i] - '0');
    }
    return neg ? -v : v;
}
}  // namespace detail

/// Parse "p" or "p/q" (decimal, optional sign). Strict: no whitespace,
/// no empty parts, q != 0.
inline rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return rational(detail::parse_decimal(text, text));
    bigint num = detail::parse_decimal(text.substr(0, slash), text);
    std::string_view den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos)
        throw parse_error("more than one '/' in rational literal '" + std::string(text) + "'");
    bigint den = detail::parse_decimal(den_part, text);
    if (den == 0)
        throw parse_error("zero denominator in rational literal '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
}

}  // namespace powser
