#include "siegel/lfunction.hpp"

#include "siegel/arith.hpp"
#include "siegel/error.hpp"

#include <cmath>
#include <limits>

namespace siegel {

namespace {

using cld = std::complex<long double>;

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Power series numerator / denominator up to degree n (denominator[0] = 1).
std::vector<Rational> series_divide(const std::vector<Rational>& num, const std::vector<Rational>& den, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    Rational v = i < static_cast<int>(num.size()) ? num[i] : Rational(0);
    for (int j = 1; j <= i && j < static_cast<int>(den.size()); ++j) v -= den[j] * out[i - j];
    out[i] = v / den[0];
  }
  return out;
}

void require_convergent(cld s) {
  if (s.real() <= 1.0L) throw DomainError("Euler product needs Re(s) > 1");
}

}  // namespace

EulerFactor euler_factor_standard(const std::vector<SatakeData>& satake, long p) {
  if (satake.empty()) throw DomainError("no Satake parameters supplied");
  EulerFactor f;
  f.p = p;
  f.degree_n = static_cast<int>(satake.size());
  f.denominator = {Rational(1), Rational(-1)};
  for (const auto& sd : satake) {
    if (sd.p != p) throw DomainError("Satake data is for p=" + std::to_string(sd.p) + ", not " + std::to_string(p));
    // (1 - a^2 X)(1 - a^{-2} X) = 1 - beta X + X^2
    f.denominator = poly_mul(f.denominator, {Rational(1), -sd.beta, Rational(1)});
  }
  return f;
}

cld euler_factor_value(const EulerFactor& factor, cld s) {
  require_convergent(s);
  const cld x = std::exp(-s * std::log(static_cast<long double>(factor.p)));
  cld den = 0, power = 1;
  for (const auto& c : factor.denominator) {
    den += to_long_double(c) * power;
    power *= x;
  }
  return 1.0L / den;
}

cld euler_factor_direct(const std::vector<SatakeData>& satake, long p, cld s) {
  require_convergent(s);
  const cld x = std::exp(-s * std::log(static_cast<long double>(p)));
  cld den = 1.0L - x;
  for (const auto& sd : satake) {
    const cld a2 = sd.alpha * sd.alpha;
    den *= (1.0L - a2 * x) * (1.0L - x / a2);
  }
  return 1.0L / den;
}

std::vector<Rational> dirichlet_from_L(const std::map<long, SatakeData>& satake, long m) {
  if (m < 1) throw DomainError("coefficient bound must be positive");
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1, Rational(0));
  out[1] = 1;
  for (long p : primes_up_to(m)) {
    auto it = satake.find(p);
    if (it == satake.end()) throw DomainError("missing Satake data at p=" + std::to_string(p));
    const Rational pp(p);
    int e = 0;
    for (long v = m; v >= p; v /= p) ++e;
    // D_p(Y) = (1 - Y)(1 - p^2 Y^2) / ((1 - pY)(1 - beta p Y + p^2 Y^2)), Y = p^{-s}.
    const auto num = poly_mul({1, -1}, {1, 0, -pp * pp});
    const auto den = poly_mul({1, -pp}, {1, -it->second.beta * pp, pp * pp});
    const auto local = series_divide(num, den, e);
    // Multiply the multiplicative function built so far by the local factor at p.
    std::vector<Rational> next(out.size(), Rational(0));
    for (long t = 1; t <= m; ++t) {
      if (out[t] == 0 || t % p == 0) continue;
      long pk = 1;
      for (int j = 0; j <= e && t * pk <= m; ++j, pk *= p) next[t * pk] = out[t] * local[j];
    }
    out.swap(next);
  }
  return out;
}

std::map<long, SatakeData> satake_table(const BasisForm& f, long m) {
  if (f.tag != FormTag::CuspEigenform) throw DomainError(f.name + " is not a cusp eigenform");
  std::map<long, SatakeData> out;
  for (long p : primes_up_to(m)) {
    auto it = f.hecke_eigenvalues.find(p);
    if (it == f.hecke_eigenvalues.end()) throw DomainError("missing a_p at p=" + std::to_string(p));
    out.emplace(p, satake(f.form.weight, p, it->second));
  }
  return out;
}

LValue lvalue_from_traces(const std::vector<long>& primes, const std::vector<long double>& traces, cld s,
                          long cutoff) {
  require_convergent(s);
  if (primes.size() != traces.size()) throw DomainError("primes and traces differ in length");
  const long double sigma = s.real();
  LValue out;
  out.prime_cutoff = cutoff;
  cld value = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const long p = primes[i];
    if (p > cutoff) break;
    const long double beta = traces[i] * traces[i] - 2.0L;
    const cld x = std::exp(-s * std::log(static_cast<long double>(p)));
    value /= (1.0L - x) * (1.0L - beta * x + x * x);
    ++out.primes_used;
  }
  out.value = value;
  // Each omitted factor lies within (1 - p^{-sigma})^{-3} of 1, so
  // |log(L / L_P)| <= 3 sum_{n > P} n^{-sigma} / (1 - P^{-sigma}) <= 3B.
  const long double pc = static_cast<long double>(cutoff);
  const long double b = std::pow(pc, 1.0L - sigma) / ((sigma - 1.0L) * (1.0L - std::pow(pc, -sigma)));
  const long double rounding = 4.0L * out.primes_used * std::numeric_limits<long double>::epsilon() * std::abs(value);
  out.tail_bound = std::abs(value) * std::expm1(3.0L * b) + rounding;
  return out;
}

LValue lvalue_numeric(int k, cld s, long cutoff) {
  require_convergent(s);
  if (cutoff < 2) throw DomainError("prime cutoff must be at least 2");
  const auto primes = primes_up_to(cutoff);
  const auto traces = normalized_prime_coefficients(k, primes);
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (std::fabs(traces[i]) > 2.0L + 1e-9L)
      throw DomainError("|alpha_p| = 1 fails at p=" + std::to_string(primes[i]));
  return lvalue_from_traces(primes, traces, s, cutoff);
}

}  // namespace siegel
