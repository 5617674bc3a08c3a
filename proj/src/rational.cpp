#include "milnor/rational.hpp"

#include <cctype>

namespace milnor {

std::string to_string(const Rational& r) {
  std::string s = numer(r).str();
  if (denom(r) != 1) {
    s += '/';
    s += denom(r).str();
  }
  return s;
}

namespace {

// Parses a run of decimal digits (at least one) into an Int.
std::optional<Int> parse_digits(std::string_view s) {
  if (s.empty()) return std::nullopt;
  Int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.empty()) return std::nullopt;
  }
  auto num = parse_digits(num_part);
  if (!num) return std::nullopt;
  Int den = 1;
  if (!den_part.empty()) {
    auto d = parse_digits(den_part);
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  Rational r(*num, den);
  if (negative) r = -r;
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int n = numer(r);
  Int d = denom(r);
  Int sn = boost::multiprecision::sqrt(n);
  Int sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace milnor
