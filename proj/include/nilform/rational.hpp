#pragma once

#include <gmpxx.h>
#include <string>

namespace nilform {

// Exact rational scalar. All arithmetic in this project is exact; there is
// no floating point anywhere.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Parses "p" or "p/q" with optional sign and surrounding whitespace.
Rational rat_parse(const std::string& s);

// Renders "p" or "p/q" (q > 1), matching the JSON wire format.
std::string rat_str(const Rational& r);

// True iff r is the square of a rational.
bool rat_is_square(const Rational& r);

}  // namespace nilform
