#pragma once

#include "siegel/rational.hpp"
#include "siegel/special.hpp"

#include <string>
#include <vector>

namespace siegel {

// Polynomial in s with exact coefficients, lowest degree first, no trailing zeros.
using SPolynomial = std::vector<Rational>;

std::string polynomial_to_string(const SPolynomial& p);
SPolynomial polynomial_multiply(const SPolynomial& a, const SPolynomial& b);
// p(a + b s)
SPolynomial polynomial_affine_substitute(const SPolynomial& p, const Rational& a, const Rational& b);

int epsilon_q(int q);

// gamma_{p,q}(s) = Gamma_p((s+q)/2) / Gamma_p(s/2) for q even and
// Gamma_{p-1}((s+q)/2) / Gamma_{p-1}((s-1)/2) for q odd, expanded exactly.
SPolynomial gamma_pq(int p, int q);
int gamma_pq_degree_formula(int p, int q);

struct FunctionalCheck {
  bool ok = false;
  int degree = 0;
  SPolynomial residual;  // gamma(s) - (-1)^deg gamma(p - q + 1 - s)
};

FunctionalCheck gamma_pq_functional_check(int p, int q);

// Numeric gamma factors.
Complex gamma_real(Complex s);      // pi^{-s/2} Gamma(s/2)
Complex gamma_complex(Complex s);   // 2 (2 pi)^{-s} Gamma(s)
Complex siegel_gamma(int n, Complex s);  // pi^{n(n-1)/4} prod_{j<n} Gamma(s - j/2)
// Gamma_n(s + k/2) / Gamma_n(s) * xi(2s) prod_{j=1}^{[n/2]} xi(4s - 2j)
Complex gamma_nk(int n, int k, Complex s);
// Gamma_R(s + eps_q) prod_j Gamma_C(s + k + lambda_j - j)
Complex gamma_rho(int q, int k, const std::vector<int>& lambda, Complex s);

}  // namespace siegel
