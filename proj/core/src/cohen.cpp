#include "siegel/arith.hpp"
#include "siegel/eisenstein2.hpp"
#include "siegel/error.hpp"

#include <cstdlib>

namespace siegel {

namespace {

// L(1 - r, chi_D) = -B_{r,chi} / r with B_{r,chi} = |D|^{r-1} sum_a chi(a) B_r(a/|D|).
Rational dirichlet_l_one_minus(int r, long disc) {
  const long m = std::labs(disc);
  Rational b = 0;
  for (long a = 1; a <= m; ++a) {
    const int chi = m == 1 ? 1 : kronecker(disc, a);
    if (chi != 0) b += chi * bernoulli_polynomial(r, make_rational(a, m));
  }
  b *= rational_pow(Rational(m), r - 1);
  return -b / r;
}

}  // namespace

Rational cohen_H(int r, long n) {
  if (r < 1) throw DomainError("cohen_H needs r >= 1");
  if (n < 0) throw DomainError("cohen_H needs N >= 0");
  if (n == 0) return zeta_one_minus(2 * r);
  const long m = r % 2 ? -n : n;
  const long mod4 = ((m % 4) + 4) % 4;
  if (mod4 == 2 || mod4 == 3) return 0;

  // m = D f^2 with D a fundamental discriminant.
  auto [core, f] = squarefree_decomposition(std::labs(m));
  long disc = m < 0 ? -core : core;
  if (((disc % 4) + 4) % 4 != 1) {
    disc *= 4;
    f /= 2;
  }
  Rational sum = 0;
  for (long d : divisors(f)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const int chi = kronecker(disc, d);
    if (chi == 0) continue;
    sum += mu * chi * rational_pow(Rational(d), r - 1) * divisor_sigma(2 * r - 1, f / d);
  }
  return dirichlet_l_one_minus(r, disc) * sum;
}

}  // namespace siegel
