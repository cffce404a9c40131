#pragma once

#include "siegel/eisenstein2.hpp"
#include "siegel/harmonic.hpp"
#include "siegel/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace siegel {

// b(m, n) for 0 <= m, n <= N: coefficients of E^2_k(diag(z, w)).
struct DoubleQExpansion {
  int weight = 0;
  long truncation = 0;
  std::map<std::pair<long, long>, Rational> coeffs;
  const Rational& at(long m, long n) const { return coeffs.at({m, n}); }
};

// b(m, n) = sum_{b^2 <= 4mn} a(m, b, n). Needs maxDet >= N^2.
DoubleQExpansion restrict_diagonal(const FourierTable2& table, long n);

struct PullbackDecomposition {
  int weight = 0;
  long truncation = 0;
  std::vector<std::string> forms;               // eigenbasis names
  std::vector<std::vector<Rational>> coeffs;    // c_ij on h_i(z) h_j(w)
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t residual_rank = 0;               // rank[A|b] - rank A
  std::optional<std::pair<long, long>> first_failing;  // (m, n) of the first inconsistent row

  bool off_diagonal_zero() const;
  std::size_t surplus_equations() const { return equations - rank; }
};

// Solves b(m, n) = sum c_ij h_i(m) h_j(n) over the Hecke eigenbasis of M_k.
PullbackDecomposition decompose_pullback(const DoubleQExpansion& dq, int k, long n);

struct CIntegralSample {
  std::complex<long double> s;
  int k = 0;
  int lambda = 0;
  std::complex<long double> value;
  long double quadrature_error = 0;
};

// The pluri-harmonic polynomial of degree lambda in {1, 2} used for q = 1, with
// d = 2k: X^{1*1_} for lambda = 1, the projected symmetric combination for lambda = 2.
HarmonicPolynomial harmonic_for_lambda(int lambda, int k);

// c(s) = int_{|S|<1} (1-|S|^2)^{k+lambda} conj(Q(R, conj s)) (1-|S|^2)^{s-2} dS for q = 1,
// R = (iS/2, 1; 1, 2i conj(S) / (1-|S|^2)), dS Lebesgue measure on the disk.
CIntegralSample c_integral_numeric(const QPolynomial& q, int k, int lambda, std::complex<long double> s,
                                   long double tol = 1e-10L);

struct Conjecture61Sample {
  long double s = 0;
  std::complex<long double> c_value;
  long double gamma_ratio = 0;
  std::complex<long double> quotient;
};

struct Conjecture61Report {
  int k = 0;
  int lambda = 0;
  std::vector<Conjecture61Sample> samples;
  std::complex<long double> constant;  // mean quotient
  long double max_relative_deviation = 0;
};

// Evaluates c((s + 1 - k)/2) / (Gamma(s + k + lambda - 1) / Gamma(s + k)) on the grid.
Conjecture61Report conjecture61_check(int lambda, int k, const std::vector<long double>& s_grid,
                                      long double tol = 1e-10L);

}  // namespace siegel
