#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "wg/error.hpp"

namespace wg {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (no whitespace). The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw ParseError("invalid rational '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational rational_pow(const Rational& base, int exponent) {
  Rational r = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  for (int e = exponent >= 0 ? exponent : -exponent; e > 0; --e) r *= b;
  return r;
}

}  // namespace wg
