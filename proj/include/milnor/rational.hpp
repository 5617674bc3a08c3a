#pragma once

// Exact arbitrary-precision rational scalar used throughout the library.
// Canonical form (gcd-reduced, denominator > 0) is maintained by the backing
// type; the helpers here add the strict string grammar used by the file
// format ("p", "-p", "p/q" with q > 0) and exact square roots.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace milnor {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& r) { return numerator(r); }
inline Int denom(const Rational& r) { return denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical "p" or "p/q" rendering (q printed only when != 1).
std::string to_string(const Rational& r);

// Strict parse: optional leading '-', digits, optionally "/digits" with a
// positive denominator. Rejects everything else (whitespace, "+", decimals,
// empty numerator/denominator, "1/-2", "1/0").
std::optional<Rational> parse_rational(std::string_view text);

// Exact square root: returns r's rational square root when both numerator and
// denominator are perfect squares, nullopt otherwise (including r < 0).
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace milnor
