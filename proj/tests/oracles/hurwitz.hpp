#pragma once

// Hurwitz class number H(N) by enumerating reduced positive definite forms
// ax^2 + bxy + cy^2 of discriminant -N, primitive or not. Forms equivalent to
// a(x^2 + y^2) count 1/2 and those equivalent to a(x^2 + xy + y^2) count 1/3.

#include <gmpxx.h>

#include <cstdlib>

namespace siegel::oracle {

inline mpq_class hurwitz_class_number(long n) {
  mpq_class total = 0;
  if (n <= 0 || n % 4 == 1 || n % 4 == 2) return total;
  for (long a = 1; 3 * a * a <= n; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      if ((b * b + n) % (4 * a) != 0) continue;
      const long c = (b * b + n) / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (a == b && b == c) total += mpq_class(1, 3);
      else if (a == c && b == 0) total += mpq_class(1, 2);
      else total += 1;
    }
  return total;
}

}  // namespace siegel::oracle
