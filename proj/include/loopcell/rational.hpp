#pragma once

#include <gmpxx.h>

#include <string>

namespace loopcell {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator), which the rest of the library relies on for equality tests.
using Rational = mpq_class;

/// Builds num/den in canonical form; den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" with optional leading minus. Throws on anything else.
Rational parse_rational(const std::string& text);

std::string rational_string(const Rational& x);

}  // namespace loopcell
