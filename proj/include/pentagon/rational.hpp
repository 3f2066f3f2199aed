#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pentagon {

using BigInt = mpz_class;
using Rational = mpq_class;

// Always construct rationals through these helpers so values stay canonical.
Rational rat(long num, long den = 1);
Rational rat(const BigInt& num, const BigInt& den);

// Parses "p/q", "p", or a decimal literal like "-0.0026".
Rational rat_from_string(std::string_view text);

BigInt big_pow(const BigInt& base, unsigned long exp);
BigInt factorial(unsigned n);
BigInt binomial(const BigInt& n, unsigned k);

std::string to_fraction_string(const Rational& q);

// Round-to-nearest decimal rendering (ties away from zero), e.g. 1/3 -> "0.333333333333".
std::string to_decimal_string(const Rational& q, int digits = 12);

}  // namespace pentagon
