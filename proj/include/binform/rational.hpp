#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace binform {

// Exact arbitrary-precision arithmetic.  Rationals are always kept in lowest
// terms with a positive denominator; there is no rounding anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);  // "p" or "p/q", never a decimal
std::string to_latex(const Rational& q);   // "\frac{p}{q}" for non-integers

Integer binomial_coefficient(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Falling factorial [m]_i = m (m-1) ... (m-i+1), with [m]_0 = 1.
Integer falling_factorial(long m, unsigned long i);

Integer int_pow(const Integer& base, unsigned long e);

}  // namespace binform
