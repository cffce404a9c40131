#include "siegel/coeff_poly.hpp"

#include <algorithm>
#include <vector>

namespace siegel {

CoeffPoly::CoeffPoly(const Rational& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

CoeffPoly CoeffPoly::k() { return monomial(1, 0, 1); }
CoeffPoly CoeffPoly::s() { return monomial(0, 1, 1); }

CoeffPoly CoeffPoly::monomial(int k_exp, int s_exp, const Rational& c) {
  CoeffPoly p;
  p.add_term({k_exp, s_exp}, c);
  return p;
}

Rational CoeffPoly::coefficient(int k_exp, int s_exp) const {
  auto it = terms_.find({k_exp, s_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int CoeffPoly::degree_k() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int CoeffPoly::degree_s() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

void CoeffPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& other) {
  CoeffPoly product;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_)
      product.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  terms_ = std::move(product.terms_);
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

CoeffPoly CoeffPoly::substitute_k(const Rational& k_value) const {
  CoeffPoly r;
  for (const auto& [e, c] : terms_) r.add_term({0, e.second}, c * rational_pow(k_value, e.first));
  return r;
}

Rational CoeffPoly::evaluate(const Rational& k_value, const Rational& s_value) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_)
    sum += c * rational_pow(k_value, e.first) * rational_pow(s_value, e.second);
  return sum;
}

std::complex<long double> CoeffPoly::evaluate(long double k_value,
                                              std::complex<long double> s_value) const {
  std::complex<long double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<long double> term = to_long_double(c);
    for (int i = 0; i < e.first; ++i) term *= k_value;
    for (int i = 0; i < e.second; ++i) term *= s_value;
    sum += term;
  }
  return sum;
}

std::complex<double> CoeffPoly::evaluate(double k_value, std::complex<double> s_value) const {
  auto v = evaluate(static_cast<long double>(k_value),
                    std::complex<long double>(s_value.real(), s_value.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then higher k-degree first.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    auto append_var = [&vars](const char* name, int power) {
      if (power == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (power > 1) vars += "^" + std::to_string(power);
    };
    append_var("k", e.first);
    append_var("s", e.second);
    if (vars.empty()) {
      out += siegel::to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += siegel::to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace siegel
