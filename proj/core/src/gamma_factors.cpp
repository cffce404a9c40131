#include "siegel/gamma_factors.hpp"

#include "siegel/error.hpp"

#include <numbers>

namespace siegel {

namespace {

void trim(SPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void require_range(int p, int q) {
  if (q < 1 || p < q || p > 8) throw DomainError("gamma_{p,q} needs 1 <= q <= p <= 8");
}

}  // namespace

std::string polynomial_to_string(const SPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    const bool negative = p[i] < 0;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const Rational mag = abs(p[i]);
    const std::string mono = i == 0 ? "" : i == 1 ? "s" : "s^" + std::to_string(i);
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

SPolynomial polynomial_multiply(const SPolynomial& a, const SPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  SPolynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

SPolynomial polynomial_affine_substitute(const SPolynomial& p, const Rational& a, const Rational& b) {
  SPolynomial out;
  SPolynomial power{Rational(1)};
  for (const auto& c : p) {
    SPolynomial term = power;
    for (auto& t : term) t *= c;
    if (out.size() < term.size()) out.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) out[i] += term[i];
    power = polynomial_multiply(power, {a, b});
  }
  trim(out);
  return out;
}

int epsilon_q(int q) {
  if (q < 1) throw DomainError("q must be positive");
  return q % 2;
}

SPolynomial gamma_pq(int p, int q) {
  require_range(p, q);
  // Gamma(x + m) / Gamma(x) = x (x+1) ... (x+m-1), applied to each factor of Gamma_p.
  SPolynomial out{Rational(1)};
  const bool even = q % 2 == 0;
  const int factors = even ? p : p - 1;
  const int shifts = even ? q / 2 : (q + 1) / 2;
  for (int j = 0; j < factors; ++j) {
    const Rational base = even ? make_rational(-j, 2) : make_rational(-1 - j, 2);  // x = s/2 + base
    for (int i = 0; i < shifts; ++i) out = polynomial_multiply(out, {base + i, Rational(1, 2)});
  }
  return out;
}

int gamma_pq_degree_formula(int p, int q) {
  require_range(p, q);
  return q % 2 == 0 ? p * q / 2 : (p - 1) * (q + 1) / 2;
}

FunctionalCheck gamma_pq_functional_check(int p, int q) {
  const SPolynomial g = gamma_pq(p, q);
  FunctionalCheck out;
  out.degree = static_cast<int>(g.size()) - 1;
  SPolynomial reflected = polynomial_affine_substitute(g, Rational(p - q + 1), Rational(-1));
  const int sign = out.degree % 2 ? -1 : 1;
  out.residual = g;
  if (out.residual.size() < reflected.size()) out.residual.resize(reflected.size(), Rational(0));
  for (std::size_t i = 0; i < reflected.size(); ++i) out.residual[i] -= sign * reflected[i];
  trim(out.residual);
  out.ok = out.residual.empty();
  return out;
}

Complex gamma_real(Complex s) { return std::pow(Complex(std::numbers::pi), -s / 2.0) * gamma(s / 2.0); }

Complex gamma_complex(Complex s) { return 2.0 * std::pow(Complex(2 * std::numbers::pi), -s) * gamma(s); }

Complex siegel_gamma(int n, Complex s) {
  if (n < 0) throw DomainError("Gamma_n needs n >= 0");
  Complex out = std::pow(std::numbers::pi, n * (n - 1) / 4.0);
  for (int j = 0; j < n; ++j) out *= gamma(s - j / 2.0);
  return out;
}

Complex gamma_nk(int n, int k, Complex s) {
  Complex out = siegel_gamma(n, s + k / 2.0) / siegel_gamma(n, s) * xi(2.0 * s);
  for (int j = 1; j <= n / 2; ++j) out *= xi(4.0 * s - 2.0 * j);
  return out;
}

Complex gamma_rho(int q, int k, const std::vector<int>& lambda, Complex s) {
  if (static_cast<int>(lambda.size()) != q) throw DomainError("need q weights lambda_1..lambda_q");
  Complex out = gamma_real(s + static_cast<double>(epsilon_q(q)));
  for (int j = 1; j <= q; ++j) out *= gamma_complex(s + static_cast<double>(k + lambda[j - 1] - j));
  return out;
}

}  // namespace siegel
