#include "siegel/arith.hpp"
#include "siegel/error.hpp"
#include "siegel/modular.hpp"

#include <numeric>

namespace siegel {

namespace {

// sum over 0 <= b < d with gcd(a, b, d) = 1 of exp(2 pi i n b / d), which is
// sum_{e | gcd(a, d)} mu(e) (d/e) [d/e divides n].
long restricted_exponential_sum(long a, long d, long n) {
  long total = 0;
  for (long e : divisors(std::gcd(a, d))) {
    const long de = d / e;
    if (n % de == 0) total += mobius(e) * de;
  }
  return total;
}

}  // namespace

HeckeEigenvalue hecke_doublecoset_eigenvalue(const QExpansion1& f, long t) {
  if (t < 1 || t > 25) throw DomainError("t must lie in 1..25");
  const long t2 = t * t;
  const long checked = f.truncation() / t2;
  if (checked < 2)
    throw DomainError("truncation " + std::to_string(f.truncation()) + " too small; need at least " +
                      std::to_string(2 * t2) + " coefficients");

  // Left cosets (1/t)(a b; 0 d) with ad = t^2, 0 <= b < d, gcd(a, b, d) = 1.
  // Each contributes (t/d)^k f((az + b)/d), since the similitude factor is 1.
  std::vector<Rational> image(static_cast<std::size_t>(checked) + 1, Rational(0));
  for (long a : divisors(t2)) {
    const long d = t2 / a;
    const Rational scale = rational_pow(make_rational(t, d), f.weight);
    for (long m = 0; m <= checked; ++m) {
      // q-power m arises from a(n) with n a / d = m.
      if ((m * d) % a != 0) continue;
      const long n = m * d / a;
      const long sum = restricted_exponential_sum(a, d, n);
      if (sum != 0) image[m] += scale * sum * f[n];
    }
  }

  long lead = 0;
  for (long m = 1; m <= checked && lead == 0; ++m)
    if (f[m] != 0) lead = m;
  if (lead == 0) throw DomainError("form vanishes on the checked coefficients");
  HeckeEigenvalue out{t, image[lead] / f[lead]};
  for (long m = 0; m <= checked; ++m)
    if (image[m] != out.value * f[m])
      throw DomainError("input is not an eigenform of the double coset at t=" + std::to_string(t) +
                        " (coefficient " + std::to_string(m) + ")");
  return out;
}

}  // namespace siegel
