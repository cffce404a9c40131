#include "siegel/special.hpp"

#include "siegel/arith.hpp"
#include "siegel/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace siegel {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real();
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw DomainError("Gamma has a pole at a nonpositive integer");
  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z), continued along the branch.
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex zeta(Complex s) {
  if (s == Complex(1, 0)) throw DomainError("zeta has a pole at s = 1");
  if (s.real() < 0.5) {
    // Functional equation zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s).
    return std::pow(Complex(2), s) * std::pow(Complex(kPi), s - 1.0) * std::sin(kPi * s / 2.0) *
           gamma(1.0 - s) * zeta(1.0 - s);
  }
  constexpr int n = 30;
  constexpr int terms = 12;
  Complex total = 0;
  for (int m = 1; m < n; ++m) total += std::pow(static_cast<double>(m), -s);
  const Complex nn = static_cast<double>(n);
  total += std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
  Complex rising = s;  // s (s+1) ... (s + 2j - 2)
  double factorial = 2;
  for (int j = 1; j <= terms; ++j) {
    total += bernoulli(2 * j).get_d() / factorial * rising * std::pow(nn, -s - static_cast<double>(2 * j - 1));
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    factorial *= (2 * j + 1) * (2 * j + 2);
  }
  return total;
}

Complex xi(Complex s) { return std::pow(Complex(kPi), -s / 2.0) * gamma(s / 2.0) * zeta(s); }

}  // namespace siegel
