#pragma once

#include "siegel/qexpansion.hpp"
#include "siegel/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace siegel {

bool supported_basis_weight(int k);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n.
QExpansion1 eisenstein_series(int k, long n);

enum class FormTag { Eisenstein, CuspEigenform };

struct BasisForm {
  QExpansion1 form;
  FormTag tag = FormTag::Eisenstein;
  std::string name;                          // "E12", "Delta", "f16", ...
  std::map<long, Rational> hecke_eigenvalues;  // a_p for primes p <= N
};

// Hecke eigenbasis of M_k(SL2(Z)), Eisenstein series first. Built from the
// monomials E4^a E6^b by exact echelon reduction; eigenvalues are verified
// against T_p on the available coefficients.
std::vector<BasisForm> qexp_basis(int k, long n);

// The normalized cusp eigenform of weight k in {12, 16, 18, 20, 22}.
BasisForm cusp_eigenform(int k, long n);

// Ramanujan tau(1..n) exactly (index 0 holds 0).
std::vector<Integer> ramanujan_tau(long n);

// a_p / p^{(k-1)/2} of the weight-k cusp eigenform for every given prime.
std::vector<long double> normalized_prime_coefficients(int k, const std::vector<long>& primes);

// Satake data for n = 1 with alpha + 1/alpha = a_p / p^{(k-1)/2}. The trace is
// kept exactly as trace_coeff * sqrt(radicand).
struct SatakeData {
  long p = 0;
  Rational trace_coeff;
  long radicand = 1;
  // alpha^2 + alpha^{-2}, always rational.
  Rational beta;
  std::complex<long double> alpha;

  std::string min_poly() const;  // "X^2 - c*X + 1"
};

SatakeData satake(int k, long p, const Rational& a_p);
SatakeData satake_from_trace(long p, const Rational& trace_coeff, long radicand);

struct HeckeEigenvalue {
  long t = 1;  // diag(t, 1/t)
  Rational value;
};

// Eigenvalue of Gamma diag(t, 1/t) Gamma on f by explicit left-coset enumeration.
// Needs a(0..2t^2); throws if f is not an eigenform on the checked coefficients.
HeckeEigenvalue hecke_doublecoset_eigenvalue(const QExpansion1& f, long t);

struct PeterssonResult {
  long double value = 0;
  long double error_estimate = 0;
};

// <f, f> = int_F |f|^2 y^{k-2} dx dy from the truncated q-expansion, using the
// termwise incomplete-gamma integral in y and adaptive quadrature in x.
PeterssonResult petersson_norm_numeric(const QExpansion1& f, long double tol);
// Independent check: direct two-dimensional quadrature of |f(z)|^2 y^{k-2}.
PeterssonResult petersson_norm_direct(const QExpansion1& f, long double tol);

}  // namespace siegel
