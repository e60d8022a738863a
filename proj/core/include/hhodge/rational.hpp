#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hhodge {

using Rational = mpq_class;
using Integer = mpz_class;

// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Floor of q and the fractional part q - floor(q) in [0, 1).
Integer floor_of(const Rational& q);
Rational frac_part(const Rational& q);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

Integer factorial(unsigned n);
Integer binomial(long n, long k);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace hhodge
