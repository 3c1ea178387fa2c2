#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sca {

using Rational = mpq_class;

// Accepts "p/q", "p", and decimal numerators or denominators such as "7.1/33".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Rounded to `digits` places, half away from zero.
std::string to_decimal(const Rational& q, int digits = 12);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace sca
