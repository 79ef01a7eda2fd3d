#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace clzeta {

/// Exact rational number. mpq_class keeps values canonical (lowest terms, positive
/// denominator) as long as they are built through make_rational / parse_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// base^exp for any integer exponent; base must be nonzero when exp < 0.
Rational pow(const Rational& base, long exp);
BigInt pow(const BigInt& base, unsigned long exp);

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "n", "-n" or "n/d".
Rational parse_rational(std::string_view text);

/// (a; x)_n = prod_{k<n} (1 - a x^k) with everything specialized to rationals.
Rational qpochhammer(const Rational& a, const Rational& x, long n);

} // namespace clzeta
