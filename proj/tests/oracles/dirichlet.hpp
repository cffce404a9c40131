#pragma once

// D(s, f) from zeta(s) zeta(2s - 2) D(s, f) = L(s - 1, f, St) by global
// Dirichlet-series division rather than local power series.
//
// L(s - 1) = prod_p 1 / ((1 - p p^{-s})(1 - beta_p p p^{-s} + p^2 p^{-2s})).

#include <gmpxx.h>

#include <map>
#include <vector>

namespace siegel::oracle {

using Series = std::vector<mpq_class>;  // index n >= 1

inline Series dirichlet_multiply(const Series& a, const Series& b) {
  Series out(a.size(), mpq_class(0));
  const long m = static_cast<long>(a.size()) - 1;
  for (long i = 1; i <= m; ++i)
    for (long j = 1; i * j <= m; ++j) out[i * j] += a[i] * b[j];
  return out;
}

// Solves a * x = b for x, with a(1) != 0.
inline Series dirichlet_divide(const Series& b, const Series& a) {
  const long m = static_cast<long>(a.size()) - 1;
  Series x(a.size(), mpq_class(0));
  for (long n = 1; n <= m; ++n) {
    mpq_class v = b[n];
    for (long d = 2; d <= n; ++d)
      if (n % d == 0) v -= a[d] * x[n / d];
    x[n] = v / a[1];
  }
  return x;
}

inline Series shifted_standard_l(const std::map<long, mpq_class>& beta, long m) {
  Series out(static_cast<std::size_t>(m) + 1, mpq_class(0));
  out[1] = 1;
  for (const auto& [p, b] : beta) {
    if (p > m) break;
    // Coefficients c_j of 1/((1 - pY)(1 - b p Y + p^2 Y^2)) by the recurrence
    // of the expanded cubic denominator 1 - (p + bp) Y + (p^2 + b p^2) Y^2 - p^3 Y^3.
    const mpq_class pp = p;
    const mpq_class d1 = -(pp + b * pp), d2 = pp * pp + b * pp * pp, d3 = -pp * pp * pp;
    std::vector<mpq_class> c{1};
    for (long q = p; q <= m; q *= p) {
      const std::size_t j = c.size();
      mpq_class v = -d1 * c[j - 1];
      if (j >= 2) v -= d2 * c[j - 2];
      if (j >= 3) v -= d3 * c[j - 3];
      c.push_back(v);
    }
    Series next(out.size(), mpq_class(0));
    for (long t = 1; t <= m; ++t) {
      if (out[t] == 0 || t % p == 0) continue;
      long q = 1;
      for (std::size_t j = 0; j < c.size() && t * q <= m; ++j, q *= p) next[t * q] = out[t] * c[j];
    }
    out.swap(next);
  }
  return out;
}

inline Series d_series_by_division(const std::map<long, mpq_class>& beta, long m) {
  Series zeta(static_cast<std::size_t>(m) + 1, mpq_class(1));
  zeta[0] = 0;
  Series zeta_shift(static_cast<std::size_t>(m) + 1, mpq_class(0));  // zeta(2s - 2): n^2 at n^2
  for (long r = 1; r * r <= m; ++r) zeta_shift[r * r] = r * r;
  const Series l = shifted_standard_l(beta, m);
  return dirichlet_divide(dirichlet_divide(l, zeta), zeta_shift);
}

}  // namespace siegel::oracle
