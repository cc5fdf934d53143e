#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qes {

// Arbitrary precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

// Accepts "p", "p/q", decimals ("-0.25") and exponents ("1e-3").
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Correctly rounded conversion to the nearest double.
double to_double(const Rational& q);

// Exact value of a finite double.
Rational from_double(double d);

Rational rpow(const Rational& q, int e);
Rational factorial(int k);

}  // namespace qes
