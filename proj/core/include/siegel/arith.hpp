#pragma once

#include "siegel/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace siegel {

std::vector<long> primes_up_to(long n);
bool is_prime(long n);
// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);
int mobius(long n);
Integer divisor_sigma(int power, long n);
long gcd3(long a, long b, long c);
// Kronecker symbol (D/n) for n >= 1.
int kronecker(long d, long n);
// n = core * f^2 with core squarefree; returns (core, f).
std::pair<long, long> squarefree_decomposition(long n);

Rational bernoulli(int n);                       // B_1 = -1/2
Rational bernoulli_polynomial(int n, const Rational& x);
// zeta(1 - m) for m >= 1, exact.
Rational zeta_one_minus(int m);

}  // namespace siegel
