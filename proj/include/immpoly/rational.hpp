#pragma once

#include <gmpxx.h>

#include <string>

namespace immpoly {

// Exact rational arithmetic; mpq_class keeps values canonical (reduced,
// positive denominator).
using Rational = mpq_class;

// Parses "p", "-p", "p/q" with integer p, q and q > 0 after
// canonicalization.  Decimal notation is rejected: inputs are exact.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& x);

// x^e for e >= 0, with x^0 == 1 for every x including 0.
Rational rational_pow(const Rational& x, int e);

}  // namespace immpoly
