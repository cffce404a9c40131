#pragma once

#include "siegel/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace siegel {

// Exact polynomial in the two formal symbols k (weight) and s (spectral
// parameter). Keys are (k-exponent, s-exponent); zero coefficients are never stored.
class CoeffPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  CoeffPoly() = default;
  CoeffPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  CoeffPoly(long constant) : CoeffPoly(Rational(constant)) {}  // NOLINT

  static CoeffPoly k();
  static CoeffPoly s();
  static CoeffPoly monomial(int k_exp, int s_exp, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int k_exp, int s_exp) const;
  int degree_k() const;
  int degree_s() const;

  CoeffPoly& operator+=(const CoeffPoly& other);
  CoeffPoly& operator-=(const CoeffPoly& other);
  CoeffPoly& operator*=(const CoeffPoly& other);
  CoeffPoly& operator*=(const Rational& c);

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(CoeffPoly a, const CoeffPoly& b) { return a *= b; }
  friend CoeffPoly operator*(CoeffPoly a, const Rational& c) { return a *= c; }
  friend CoeffPoly operator*(const Rational& c, CoeffPoly a) { return a *= c; }
  CoeffPoly operator-() const;

  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

  // Substitute a rational value for k; the result only involves s.
  CoeffPoly substitute_k(const Rational& k_value) const;
  Rational evaluate(const Rational& k_value, const Rational& s_value) const;
  std::complex<long double> evaluate(long double k_value, std::complex<long double> s_value) const;
  std::complex<double> evaluate(double k_value, std::complex<double> s_value) const;

  // Human-readable form such as "-k - s" or "k^2 + 2*k*s + s^2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

}  // namespace siegel
