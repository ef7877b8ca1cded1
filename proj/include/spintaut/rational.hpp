#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace spintaut {

using Rational = mpq_class;
using Integer = mpz_class;

/// Formats as "num/den" (always with a denominator, "0/1" for zero).
std::string to_string(const Rational& q);

/// Accepts "num/den", "num" or "-num/den"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer double_factorial(int n);  // (-1)!! = 1
Integer binomial(int n, int k);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

}  // namespace spintaut
