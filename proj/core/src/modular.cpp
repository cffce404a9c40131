#include "siegel/modular.hpp"

#include "siegel/arith.hpp"
#include "siegel/error.hpp"
#include "siegel/exact_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

namespace {

using int128 = __int128;

Integer to_integer(int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(mag >> 64));
  Integer lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

// tau(1..n) via Delta = q (prod (1 - q^m)^3)^8 and Jacobi's series for the cube.
std::vector<int128> tau_int128(long n) {
  std::vector<int128> out(static_cast<std::size_t>(n) + 1, 0);
  if (n < 1) return out;
  const long len = n;  // coefficients q^0 .. q^{n-1} of the product
  std::vector<std::pair<long, int128>> jacobi;
  for (long j = 0;; ++j) {
    long e = j * (j + 1) / 2;
    if (e >= len) break;
    jacobi.emplace_back(e, (j % 2 ? -1 : 1) * static_cast<int128>(2 * j + 1));
  }
  std::vector<int128> power(static_cast<std::size_t>(len), 0);
  for (auto [e, c] : jacobi) power[e] = c;
  for (int step = 1; step < 8; ++step) {
    std::vector<int128> next(static_cast<std::size_t>(len), 0);
    for (long i = 0; i < len; ++i) {
      if (power[i] == 0) continue;
      for (auto [e, c] : jacobi) {
        if (i + e >= len) break;
        next[i + e] += power[i] * c;
      }
    }
    power.swap(next);
  }
  for (long m = 1; m <= n; ++m) out[m] = power[m - 1];
  return out;
}

std::string form_name(int k, FormTag tag) {
  if (tag == FormTag::Eisenstein) return "E" + std::to_string(k);
  return k == 12 ? "Delta" : "f" + std::to_string(k);
}

}  // namespace

bool supported_basis_weight(int k) { return k >= 4 && k <= 22 && k % 2 == 0; }

QExpansion1 eisenstein_series(int k, long n) {
  if (k < 4 || k % 2 != 0) throw DomainError("Eisenstein series needs even weight k >= 4");
  if (n < 0) throw DomainError("truncation must be nonnegative");
  const Rational c = Rational(-2 * k) / bernoulli(k);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = 1;
  for (long m = 1; m <= n; ++m) coeffs[m] = c * divisor_sigma(k - 1, m);
  return {k, std::move(coeffs)};
}

std::vector<BasisForm> qexp_basis(int k, long n) {
  if (!supported_basis_weight(k))
    throw DomainError("unsupported weight " + std::to_string(k) + "; expected an even k in 4..22");
  if (n < 1) throw DomainError("truncation must be at least 1");

  // Exponents (a, b) with 4a + 6b = k, lexicographically decreasing in a.
  std::vector<std::pair<int, int>> exps;
  for (int a = k / 4; a >= 0; --a)
    if ((k - 4 * a) % 6 == 0) exps.emplace_back(a, (k - 4 * a) / 6);
  const long dim = static_cast<long>(exps.size());
  const long len = std::max(n, 2 * dim + 2);

  const QExpansion1 e4 = eisenstein_series(4, len), e6 = eisenstein_series(6, len);
  RationalMatrix rows;
  for (auto [a, b] : exps) {
    QExpansion1 m(0, std::vector<Rational>(static_cast<std::size_t>(len) + 1, Rational(0)));
    m.coeffs[0] = 1;
    for (int i = 0; i < a; ++i) m = m * e4;
    for (int i = 0; i < b; ++i) m = m * e6;
    rows.push_back(m.coeffs);
  }
  RowEchelon ech = row_reduce(rows);

  std::vector<BasisForm> basis;
  BasisForm eis{truncate(eisenstein_series(k, len), n), FormTag::Eisenstein, form_name(k, FormTag::Eisenstein), {}};
  basis.push_back(std::move(eis));
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    if (ech.pivots[r] == 0) continue;
    if (ech.pivots[r] != 1)
      throw DomainError("cusp space of weight " + std::to_string(k) + " has no normalized eigenform at q^1");
    BasisForm cusp{QExpansion1(k, ech.reduced[r]), FormTag::CuspEigenform, form_name(k, FormTag::CuspEigenform), {}};
    cusp.form = truncate(cusp.form, n);
    basis.push_back(std::move(cusp));
  }
  if (static_cast<long>(basis.size()) != dim)
    throw DomainError("echelon reduction produced an unexpected basis size");

  for (auto& bf : basis) {
    const Rational a1 = bf.form[1];
    for (long p : primes_up_to(n)) {
      Rational lambda = bf.form[p] / a1;
      QExpansion1 tp = hecke_tp(bf.form, p);
      for (long m = 0; m <= tp.truncation(); ++m)
        if (tp[m] != lambda * bf.form[m])
          throw DomainError(bf.name + " is not a T_" + std::to_string(p) + " eigenform");
      bf.hecke_eigenvalues[p] = lambda;
    }
  }
  return basis;
}

BasisForm cusp_eigenform(int k, long n) {
  if (k == 12) {
    auto tau = ramanujan_tau(n);
    std::vector<Rational> c(tau.begin(), tau.end());
    BasisForm bf{QExpansion1(12, std::move(c)), FormTag::CuspEigenform, "Delta", {}};
    for (long p : primes_up_to(n)) bf.hecke_eigenvalues[p] = bf.form[p];
    return bf;
  }
  for (auto& bf : qexp_basis(k, n))
    if (bf.tag == FormTag::CuspEigenform) return bf;
  throw DomainError("no cusp form of weight " + std::to_string(k));
}

std::vector<Integer> ramanujan_tau(long n) {
  auto raw = tau_int128(n);
  std::vector<Integer> out;
  out.reserve(raw.size());
  for (auto v : raw) out.push_back(to_integer(v));
  return out;
}

std::vector<long double> normalized_prime_coefficients(int k, const std::vector<long>& primes) {
  if (k != 12 && !(k >= 16 && k <= 22 && k % 2 == 0))
    throw DomainError("no cusp eigenform of weight " + std::to_string(k));
  if (primes.empty()) return {};
  const long maxp = *std::max_element(primes.begin(), primes.end());
  auto tau = tau_int128(maxp);
  std::vector<long double> out;
  out.reserve(primes.size());
  if (k == 12) {
    for (long p : primes)
      out.push_back(static_cast<long double>(tau[p]) / std::pow(static_cast<long double>(p), 5.5L));
    return out;
  }
  // f_k = Delta * E_{k-12}; only prime indices are needed.
  const int w = k - 12;
  const long double c = -2.0L * w / to_long_double(bernoulli(w));
  std::vector<long double> sigma(static_cast<std::size_t>(maxp) + 1, 0.0L);
  for (long d = 1; d <= maxp; ++d) {
    const long double dp = std::pow(static_cast<long double>(d), w - 1);
    for (long m = d; m <= maxp; m += d) sigma[m] += dp;
  }
  std::vector<long double> tau_ld(static_cast<std::size_t>(maxp) + 1);
  for (long m = 0; m <= maxp; ++m) tau_ld[m] = static_cast<long double>(tau[m]);
  for (long p : primes) {
    long double acc = tau_ld[p];
    for (long j = 1; j < p; ++j) acc += tau_ld[p - j] * c * sigma[j];
    out.push_back(acc / std::pow(static_cast<long double>(p), (k - 1) / 2.0L));
  }
  return out;
}

std::string SatakeData::min_poly() const {
  if (trace_coeff == 0) return "X^2 + 1";
  std::string c = radicand == 1 ? siegel::to_string(trace_coeff)
                                : "(" + siegel::to_string(trace_coeff) + ")*sqrt(" + std::to_string(radicand) + ")";
  return "X^2 - " + c + "*X + 1";
}

SatakeData satake_from_trace(long p, const Rational& trace_coeff, long radicand) {
  if (radicand < 1) throw DomainError("radicand must be positive");
  SatakeData s;
  s.p = p;
  s.trace_coeff = trace_coeff;
  s.radicand = radicand;
  s.beta = trace_coeff * trace_coeff * radicand - 2;
  const long double c = to_long_double(trace_coeff) * std::sqrt(static_cast<long double>(radicand));
  const long double disc = c * c - 4.0L;
  if (disc <= 0) s.alpha = {c / 2.0L, std::sqrt(-disc) / 2.0L};
  else s.alpha = {(c + std::sqrt(disc)) / 2.0L, 0.0L};
  return s;
}

SatakeData satake(int k, long p, const Rational& a_p) {
  if (k % 2 != 0) throw DomainError("satake needs even weight");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  // a_p / p^{(k-1)/2} = (a_p / p^{k/2}) sqrt(p)
  return satake_from_trace(p, a_p / rational_pow(Rational(p), k / 2), p);
}

}  // namespace siegel
