#include "siegel/arith.hpp"

#include "siegel/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

namespace siegel {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t size = out.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < size; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(long n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Integer divisor_sigma(int power, long n) {
  Integer total = 0;
  for (long d : divisors(n)) total += integer_pow(d, static_cast<unsigned long>(power));
  return total;
}

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(a, b), c); }

int kronecker(long d, long n) {
  if (n < 1) throw DomainError("kronecker symbol needs n >= 1");
  int result = 1;
  for (auto [p, e] : factorize(n)) {
    int chi;
    if (p == 2) {
      if (d % 2 == 0) chi = 0;
      else {
        long r = ((d % 8) + 8) % 8;
        chi = (r == 1 || r == 7) ? 1 : -1;
      }
    } else {
      long a = ((d % p) + p) % p;
      if (a == 0) chi = 0;
      else {
        // Euler's criterion by fast exponentiation.
        long long base = a, acc = 1, exp = (p - 1) / 2;
        while (exp > 0) {
          if (exp & 1) acc = acc * base % p;
          base = base * base % p;
          exp >>= 1;
        }
        chi = acc == 1 ? 1 : -1;
      }
    }
    for (int i = 0; i < e; ++i) result *= chi;
    if (result == 0) return 0;
  }
  return result;
}

std::pair<long, long> squarefree_decomposition(long n) {
  long core = 1, f = 1;
  for (auto [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) core *= p;
  }
  return {core, f};
}

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli index must be nonnegative");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    Rational sum = 0;
    Integer binom = 1;
    for (int j = 0; j < m; ++j) {
      sum += binom * table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    table.push_back(-sum / (m + 1));
  }
  return table[n];
}

Rational bernoulli_polynomial(int n, const Rational& x) {
  Rational total = 0;
  Integer binom = 1;
  for (int j = 0; j <= n; ++j) {
    total += binom * bernoulli(j) * rational_pow(x, n - j);
    binom = binom * (n - j) / (j + 1);
  }
  return total;
}

Rational zeta_one_minus(int m) {
  if (m < 1) throw DomainError("zeta_one_minus needs m >= 1");
  if (m == 1) return Rational(-1, 2);
  return -bernoulli(m) / m;
}

}  // namespace siegel
