#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ordtopia {

/// Exact rational number. Every distance table and every sequence
/// coordinate in the library is held as one of these.
using Rational = mpq_class;

/// Canonical "p/q" form (the denominator is always written, "3/1" included).
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

Rational abs(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r);

}  // namespace ordtopia
