#include "siegel/error.hpp"
#include "siegel/modular.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace siegel {

namespace {

constexpr long double kPi = boost::math::constants::pi<long double>();

std::vector<long double> numeric_coeffs(const QExpansion1& f) {
  if (f.weight < 2) throw DomainError("Petersson norm needs weight >= 2");
  if (f.truncation() < 1 || f[0] != 0) throw DomainError("Petersson norm needs a cusp form");
  std::vector<long double> out;
  for (const auto& c : f.coeffs) out.push_back(to_long_double(c));
  return out;
}

long double lower_boundary(long double x) { return std::sqrt(1.0L - x * x); }

// Integral over the fundamental domain restricted to a(m) a(n) with m, n <= n_max.
// Only bands m + n >= s_min are summed.
long double termwise_integrand(const std::vector<long double>& a, long n_max, int k, long double x,
                               long s_min = 2) {
  const long double y0 = lower_boundary(x);
  long double total = 0;
  for (long s = s_min; s <= 2 * n_max; ++s) {
    long double inner = 0;
    for (long m = std::max(1L, s - n_max); m <= std::min(n_max, s - 1); ++m)
      inner += a[m] * a[s - m] * std::cos(2.0L * kPi * (2 * m - s) * x);
    if (inner == 0) continue;
    const long double c = 2.0L * kPi * s;
    total += inner * boost::math::tgamma(static_cast<long double>(k - 1), c * y0) / std::pow(c, k - 1);
  }
  return total;
}

}  // namespace

PeterssonResult petersson_norm_numeric(const QExpansion1& f, long double tol) {
  const auto a = numeric_coeffs(f);
  const long n = f.truncation();
  const int k = f.weight;
  using boost::math::quadrature::gauss_kronrod;
  long double err = 0;
  const long double value = 2.0L * gauss_kronrod<long double, 61>::integrate(
      [&](long double x) { return termwise_integrand(a, n, k, x); }, 0.0L, 0.5L, 15, 1e-14L, &err);
  // The bands m + n > N are decaying like exp(-pi sqrt(3) (m + n)); their
  // included size dominates everything beyond the truncation.
  const long double tail = 2.0L * gauss_kronrod<long double, 61>::integrate(
      [&](long double x) { return termwise_integrand(a, n, k, x, n + 1); }, 0.0L, 0.5L, 15, 1e-14L, nullptr);
  PeterssonResult out{value, 2.0L * err + std::fabs(tail)};
  if (out.error_estimate > tol * std::fabs(value))
    throw DomainError("Petersson tolerance unachievable at truncation " + std::to_string(n));
  return out;
}

PeterssonResult petersson_norm_direct(const QExpansion1& f, long double tol) {
  const auto a = numeric_coeffs(f);
  const long n = f.truncation();
  const int k = f.weight;
  using boost::math::quadrature::gauss_kronrod;
  auto density = [&](long double x, long double y) {
    long double re = 0, im = 0;
    for (long m = 1; m <= n; ++m) {
      const long double r = a[m] * std::exp(-2.0L * kPi * m * y);
      re += r * std::cos(2.0L * kPi * m * x);
      im += r * std::sin(2.0L * kPi * m * x);
    }
    return (re * re + im * im) * std::pow(y, k - 2);
  };
  long double err = 0;
  const long double value = 2.0L * gauss_kronrod<long double, 31>::integrate(
      [&](long double x) {
        const long double y0 = lower_boundary(x);
        return gauss_kronrod<long double, 31>::integrate(
            [&](long double y) { return density(x, y); }, y0, y0 + 12.0L, 10, 1e-13L, nullptr);
      },
      0.0L, 0.5L, 10, 1e-12L, &err);
  PeterssonResult out{value, 2.0L * err};
  if (out.error_estimate > tol * std::fabs(value))
    throw DomainError("direct Petersson quadrature did not reach the requested tolerance");
  return out;
}

}  // namespace siegel
