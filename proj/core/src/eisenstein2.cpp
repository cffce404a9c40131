#include "siegel/eisenstein2.hpp"

#include "siegel/arith.hpp"
#include "siegel/error.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace siegel {

long HalfIntegralForm::content() const { return gcd3(std::labs(a), std::labs(b), std::labs(c)); }

std::string HalfIntegralForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

HalfIntegralForm reduce_form(const HalfIntegralForm& t) {
  const long disc = t.discriminant();
  if (disc < 0 || t.a < 0 || t.c < 0)
    throw DomainError("form " + t.to_string() + " is not positive semidefinite");
  if (disc == 0) return {0, 0, t.content()};
  long a = t.a, b = t.b, c = t.c;
  while (true) {
    // Translate so |b| <= a, then swap if a > c.
    if (std::labs(b) > a) {
      const long k = static_cast<long>(std::floor((a - b) / (2.0 * a)));
      c = a * k * k + b * k + c;
      b = b + 2 * a * k;
      continue;
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  return {a, std::labs(b), c};
}

const Rational& FourierTable2::coefficient(const HalfIntegralForm& t) const {
  const HalfIntegralForm r = reduce_form(t);
  auto it = entries.find(r);
  if (it == entries.end())
    throw DomainError("coefficient " + t.to_string() + " lies outside the table (maxDet " + std::to_string(max_det) + ")");
  return it->second;
}

FourierTable2 siegel_eisenstein2(int k, long max_det) {
  if (k < 4 || k % 2 != 0) throw DomainError("degree-2 Eisenstein series needs even weight k >= 4");
  if (max_det < 0) throw DomainError("maxDet must be nonnegative");
  FourierTable2 table;
  table.weight = k;
  table.max_det = max_det;
  table.entries[{0, 0, 0}] = 1;

  // Rank 1: the Phi-operator image, i.e. the degree-1 Eisenstein coefficient at the content.
  const Rational rank1 = 2 / zeta_one_minus(k);
  for (long m = 1; m <= max_det; ++m) table.entries[{0, 0, m}] = rank1 * divisor_sigma(k - 1, m);

  const Rational rank2 = 2 / (zeta_one_minus(k) * zeta_one_minus(2 * k - 2));
  std::map<long, Rational> h_cache;
  auto h = [&](long n) -> const Rational& {
    auto it = h_cache.find(n);
    if (it == h_cache.end()) it = h_cache.emplace(n, cohen_H(k - 1, n)).first;
    return it->second;
  };
  const long bound = 4 * max_det;
  for (long a = 1; 3 * a * a <= bound; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = a; 4 * a * c - b * b <= bound; ++c) {
        HalfIntegralForm t{a, b, c};
        const long disc = t.discriminant();
        Rational sum = 0;
        for (long d : divisors(t.content()))
          sum += rational_pow(Rational(d), k - 1) * h(disc / (d * d));
        table.entries[t] = rank2 * sum;
      }
  return table;
}

}  // namespace siegel
