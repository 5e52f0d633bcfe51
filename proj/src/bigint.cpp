#include "belyi/bigint.hpp"

#include <gmp.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace belyi {

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.backend().data(), n);
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.backend().data(), n, k);
  return out;
}

BigInt pow_big(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), exponent);
  return out;
}

double log_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_big: nonpositive argument");
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.backend().data());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

double log_ratio(const BigInt& a, const BigInt& b) { return log_big(a) - log_big(b); }

HighPrec to_high_prec(const Rational& value) {
  return HighPrec(boost::multiprecision::numerator(value)) /
         HighPrec(boost::multiprecision::denominator(value));
}

std::string to_decimal(const HighPrec& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

}  // namespace belyi
