#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace belyi {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// 60 significant decimal digits; used wherever an exact quantity must be
/// turned into a real (square roots, real powers, logarithms).
using HighPrec = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>>;

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow_big(const BigInt& base, std::uint64_t exponent);

/// Natural logarithm of a positive integer, accurate for any size.
double log_big(const BigInt& value);
/// log(a / b) for positive a, b.
double log_ratio(const BigInt& a, const BigInt& b);

HighPrec to_high_prec(const Rational& value);
std::string to_decimal(const HighPrec& value, int digits = 20);

}  // namespace belyi
