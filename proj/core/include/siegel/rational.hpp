#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace siegel {

using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "n", "-n", "n/d". Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// num/den in lowest terms; den != 0.
Rational make_rational(long num, long den);

Rational rational_pow(const Rational& base, long exponent);
Integer integer_pow(long base, unsigned long exponent);

long double to_long_double(const Rational& q);
inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace siegel
