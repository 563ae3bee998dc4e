#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace monograph {

// Exact arbitrary-precision fraction. mpq_class keeps the value canonical
// (lowest terms, positive denominator), which is exactly the invariant we
// need, so we use it directly instead of wrapping it.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or
// zero denominator.
Rational parse_rational(const std::string& text);

// Formats as "p/q" with q > 0, or "p" when the value is an integer.
std::string to_string(const Rational& r);

inline Rational rational_abs(const Rational& r) { return abs(r); }

// floor(r) as an Integer.
Integer rational_floor(const Rational& r);

// 2^e as a Rational, e may be negative.
Rational pow2(long e);

// Largest multiple of 1/denominator not exceeding sqrt(r). Requires r >= 0.
Rational sqrt_lower_bound(const Rational& r, const Integer& denominator);
// Smallest multiple of 1/denominator not below sqrt(r). Requires r >= 0.
Rational sqrt_upper_bound(const Rational& r, const Integer& denominator);

// Distance of r to the nearest integer, in [0, 1/2].
Rational dist_to_integers(const Rational& r);

}  // namespace monograph
