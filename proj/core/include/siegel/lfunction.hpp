#pragma once

#include "siegel/modular.hpp"
#include "siegel/rational.hpp"

#include <complex>
#include <map>
#include <vector>

namespace siegel {

// Local standard-L factor at p: the denominator (1 - X) prod_j (1 - a_j^2 X)(1 - a_j^{-2} X)
// in X = p^{-s}, with coefficients listed lowest degree first.
struct EulerFactor {
  long p = 0;
  int degree_n = 0;
  std::vector<Rational> denominator;
};

EulerFactor euler_factor_standard(const std::vector<SatakeData>& satake, long p);
// 1 / denominator(p^{-s}); requires Re(s) > 1.
std::complex<long double> euler_factor_value(const EulerFactor& factor, std::complex<long double> s);
// Same value as a product over the numeric inverse roots 1, alpha^2, alpha^{-2}.
std::complex<long double> euler_factor_direct(const std::vector<SatakeData>& satake, long p,
                                              std::complex<long double> s);

// Dirichlet coefficients D(1..m) of D(s, f) for n = 1, from
// zeta(s) zeta(2s - 2) D(s, f) = L(s - 1, f, St), by exact local division.
// `satake` must cover every prime <= m. Index 0 is unused.
std::vector<Rational> dirichlet_from_L(const std::map<long, SatakeData>& satake, long m);

// Satake data of a basis eigenform for every prime <= m.
std::map<long, SatakeData> satake_table(const BasisForm& f, long m);

struct LValue {
  std::complex<long double> value;
  long double tail_bound = 0;  // |L - value| <= tail_bound
  long prime_cutoff = 0;
  long primes_used = 0;
};

// Partial Euler product over p <= cutoff given the normalized traces a_p / p^{(k-1)/2}.
// The bound assumes |alpha_p| = 1 for the omitted primes and includes rounding.
LValue lvalue_from_traces(const std::vector<long>& primes, const std::vector<long double>& traces,
                          std::complex<long double> s, long cutoff);
LValue lvalue_numeric(int k, std::complex<long double> s, long cutoff);

}  // namespace siegel
