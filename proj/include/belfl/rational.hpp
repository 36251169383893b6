#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace belfl {

/// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "num/den", an integer, or a decimal literal such as "0.8" (stored
/// exactly as 4/5). A leading '-' is accepted. Throws ParseError on bad input.
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("1/1", "0/1").
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool in_unit_interval(const Rational& value) {
  return value >= 0 && value <= 1;
}

}  // namespace belfl
