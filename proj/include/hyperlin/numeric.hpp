#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperlin {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// 40 decimal digits, roughly 133 bits of mantissa.
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

/// Parses "num/den" or a plain integer. Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Parses a decimal literal ("0.001", "1.5e-3") into the exact rational it denotes.
/// Fraction notation is rejected.
Rational parse_decimal_exact(std::string_view text);

bool looks_like_fraction(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

HighFloat to_high(const Rational& q);

BigInt factorial(int k);
BigInt binomial(int n, int k);

/// n(n-1)...(n-k+1); zero when k > n >= 0.
BigInt falling_factorial(long long n, int k);

}  // namespace hyperlin
