#pragma once

#include "siegel/rational.hpp"

#include <vector>

namespace siegel {

// Truncated q-expansion sum_{n <= N} a(n) q^n of a degree-one form.
struct QExpansion1 {
  int weight = 0;
  std::vector<Rational> coeffs;  // a(0), ..., a(N)

  QExpansion1() = default;
  QExpansion1(int k, std::vector<Rational> c) : weight(k), coeffs(std::move(c)) {}

  long truncation() const { return static_cast<long>(coeffs.size()) - 1; }
  const Rational& operator[](long n) const { return coeffs.at(static_cast<std::size_t>(n)); }

  QExpansion1& operator+=(const QExpansion1& other);
  QExpansion1& operator*=(const Rational& c);
  friend bool operator==(const QExpansion1&, const QExpansion1&) = default;
};

QExpansion1 operator+(QExpansion1 a, const QExpansion1& b);
QExpansion1 operator*(const Rational& c, QExpansion1 f);
// Product of forms; weights add and the truncation is the smaller one.
QExpansion1 operator*(const QExpansion1& a, const QExpansion1& b);
QExpansion1 truncate(const QExpansion1& f, long n);

// T_p f with a(n) -> a(pn) + p^{k-1} a(n/p); the result is truncated to N / p.
QExpansion1 hecke_tp(const QExpansion1& f, long p);

}  // namespace siegel
