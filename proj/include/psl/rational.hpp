#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace psl {

/// Exact rational number. All geometry in this library is computed with it.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Formats as "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const Rational& value);

/// Parses "p/q", "p" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lossy conversion for presentation (SVG output only).
double to_double(const Rational& value);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

}  // namespace psl
