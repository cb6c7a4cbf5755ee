#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superrr {

// Arbitrary precision rational; always kept in canonical form.
using Rational = mpq_class;

// Accepts "n" or "p/q" with optional sign and surrounding blanks.
// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// p/q in canonical form; q must be nonzero.
Rational ratio(long p, long q);

Rational factorial(long n);

}  // namespace superrr
