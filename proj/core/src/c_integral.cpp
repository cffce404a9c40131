#include "siegel/error.hpp"
#include "siegel/pullback.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <array>
#include <cmath>
#include <map>

namespace siegel {

namespace {

using cld = std::complex<long double>;
constexpr long double kPi = boost::math::constants::pi<long double>();

enum class EntryKind { StarStar, Mixed, SubSub };

EntryKind entry_kind(const Link& l) {
  if (l.is_mixed()) return EntryKind::Mixed;
  if (l.is_star_star()) return EntryKind::StarStar;
  if (l.is_sub_sub()) return EntryKind::SubSub;
  throw DomainError("link " + l.to_string() + " is not in the split index set");
}

// Q(R, s) as a polynomial in (R11, R12, R22): exponent triple -> coefficient at s.
using EntryPoly = std::vector<std::pair<std::array<int, 3>, cld>>;

EntryPoly entry_polynomial(const QPolynomial& q, long double k, cld s) {
  std::map<std::array<int, 3>, cld> acc;
  for (const auto& [links, c] : q.terms) {
    std::array<int, 3> e{0, 0, 0};
    for (const auto& l : links) ++e[static_cast<int>(entry_kind(l))];
    acc[e] += c.evaluate(k, s);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace

HarmonicPolynomial harmonic_for_lambda(int lambda, int k) {
  if (k < 1) throw DomainError("weight must be positive");
  if (lambda == 1) return mixed_link_polynomial({2, 2, 2 * k, 1});
  if (lambda == 2) {
    auto proj = project_harmonic(symmetric_degree_two({2, 2, 2 * k, 2}));
    if (proj.no_harmonic_completion) throw DomainError("symmetric degree-two polynomial has no harmonic completion");
    return proj.polynomial;
  }
  throw DomainError("lambda must be 1 or 2");
}

CIntegralSample c_integral_numeric(const QPolynomial& q, int k, int lambda, cld s, long double tol) {
  if (s.real() + k + lambda <= 1.0L)
    throw DomainError("c-integral diverges: need Re(s) + k + lambda > 1");
  const EntryPoly poly = entry_polynomial(q, static_cast<long double>(k), std::conj(s));
  CIntegralSample out{s, k, lambda, {0, 0}, 0};
  if (poly.empty()) return out;
  int max_deg = 0;
  for (const auto& [e, c] : poly) max_deg = std::max(max_deg, e[0] + e[1] + e[2]);
  // Each monomial is a trigonometric polynomial in theta of degree <= max_deg,
  // so the trapezoidal rule with more nodes is exact in theta.
  const int nodes = 4 * max_deg + 8;

  // For fixed r the theta-average of conj(Q(R)) as a function of r.
  auto angular = [&](long double r) {
    cld total = 0;
    const long double w = 1.0L - r * r;
    for (int j = 0; j < nodes; ++j) {
      const long double theta = 2.0L * kPi * j / nodes;
      const cld S = std::polar(r, theta);
      const cld r11 = cld(0, 0.5L) * S;
      const cld r22 = cld(0, 2.0L) * std::conj(S) / w;
      cld value = 0;
      for (const auto& [e, c] : poly) value += c * std::pow(r11, e[0]) * std::pow(r22, e[2]);
      total += std::conj(value);
    }
    return total * (2.0L * kPi / nodes);
  };
  auto integrand = [&](long double r, bool imag) {
    const long double w = 1.0L - r * r;
    if (w <= 0) return 0.0L;
    const cld weight = std::exp((static_cast<long double>(k + lambda - 2) + s) * std::log(w));
    const cld v = r * weight * angular(r);
    return imag ? v.imag() : v.real();
  };
  boost::math::quadrature::tanh_sinh<long double> integrator;
  long double err_re = 0, err_im = 0, l1 = 0;
  const long double re = integrator.integrate([&](long double r) { return integrand(r, false); }, 0.0L, 1.0L,
                                              tol, &err_re, &l1);
  const long double im = integrator.integrate([&](long double r) { return integrand(r, true); }, 0.0L, 1.0L,
                                              tol, &err_im, &l1);
  out.value = {re, im};
  out.quadrature_error = (err_re + err_im) * std::max(1.0L, l1);
  return out;
}

Conjecture61Report conjecture61_check(int lambda, int k, const std::vector<long double>& s_grid, long double tol) {
  if (s_grid.empty()) throw DomainError("empty s grid");
  const QPolynomial q = compute_Q(harmonic_for_lambda(lambda, k), true);
  Conjecture61Report report;
  report.k = k;
  report.lambda = lambda;
  cld sum = 0;
  for (long double s : s_grid) {
    const long double sigma = (s + 1.0L - k) / 2.0L;
    CIntegralSample c = c_integral_numeric(q, k, lambda, {sigma, 0}, tol);
    const long double ratio = std::exp(std::lgamma(s + k + lambda - 1.0L) - std::lgamma(s + k));
    Conjecture61Sample sample{s, c.value, ratio, c.value / ratio};
    sum += sample.quotient;
    report.samples.push_back(sample);
  }
  report.constant = sum / static_cast<long double>(s_grid.size());
  for (const auto& sample : report.samples)
    report.max_relative_deviation = std::max(report.max_relative_deviation,
                                             std::abs(sample.quotient - report.constant) / std::abs(report.constant));
  return report;
}

}  // namespace siegel
