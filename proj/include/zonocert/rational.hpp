#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zonocert {

/// Exact rational number. GMP keeps values canonical (lowest terms,
/// positive denominator) as long as they are built through `rat()` or
/// arithmetic; never construct from a raw "p/q" string without `parse_rational`.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
/// Throws Error{InvalidInput} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }
inline Rational abs_value(const Rational& r) { return abs(r); }

/// Decimal rendering with `digits` significant digits (rendering only).
std::string to_decimal(const Rational& r, int digits);

} // namespace zonocert
