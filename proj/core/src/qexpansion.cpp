#include "siegel/qexpansion.hpp"

#include "siegel/error.hpp"

#include <algorithm>

namespace siegel {

QExpansion1& QExpansion1::operator+=(const QExpansion1& other) {
  if (weight != other.weight) throw DomainError("cannot add forms of different weight");
  coeffs.resize(std::min(coeffs.size(), other.coeffs.size()));
  for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] += other.coeffs[n];
  return *this;
}

QExpansion1& QExpansion1::operator*=(const Rational& c) {
  for (auto& a : coeffs) a *= c;
  return *this;
}

QExpansion1 operator+(QExpansion1 a, const QExpansion1& b) { return a += b; }
QExpansion1 operator*(const Rational& c, QExpansion1 f) { return f *= c; }

QExpansion1 operator*(const QExpansion1& a, const QExpansion1& b) {
  const std::size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<Rational> out(len, Rational(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return {a.weight + b.weight, std::move(out)};
}

QExpansion1 truncate(const QExpansion1& f, long n) {
  if (n > f.truncation()) throw DomainError("cannot extend a truncated q-expansion");
  return {f.weight, std::vector<Rational>(f.coeffs.begin(), f.coeffs.begin() + n + 1)};
}

QExpansion1 hecke_tp(const QExpansion1& f, long p) {
  const long m = f.truncation() / p;
  const Rational pk = rational_pow(Rational(p), f.weight - 1);
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1);
  for (long n = 0; n <= m; ++n) {
    out[n] = f[n * p];
    if (n % p == 0) out[n] += pk * f[n / p];
  }
  return {f.weight, std::move(out)};
}

}  // namespace siegel
