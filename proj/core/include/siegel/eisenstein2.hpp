#pragma once

#include "siegel/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace siegel {

// Cohen's H(r, N). Zero unless (-1)^r N is 0 or 1 mod 4; H(r, 0) = zeta(1 - 2r).
Rational cohen_H(int r, long n);

// Half-integral T = (a, b/2; b/2, c), i.e. the form a x^2 + b xy + c y^2.
struct HalfIntegralForm {
  long a = 0;
  long b = 0;
  long c = 0;
  long discriminant() const { return 4 * a * c - b * b; }  // 4 det T
  long content() const;
  auto operator<=>(const HalfIntegralForm&) const = default;
  std::string to_string() const;
};

// GL2(Z)-reduced representative of a positive semidefinite form: 0 <= b <= a <= c
// for rank 2, (0, 0, content) for rank 1, (0, 0, 0) for zero. Throws if T is indefinite.
HalfIntegralForm reduce_form(const HalfIntegralForm& t);

// Fourier coefficients of the degree-2 Siegel Eisenstein series of weight k at
// s = 0, indexed by reduced forms. Holds every rank-2 form with det T <= maxDet
// and every rank-1 form of content <= maxDet.
struct FourierTable2 {
  int weight = 0;
  long max_det = 0;
  std::map<HalfIntegralForm, Rational> entries;

  // Looks up any semidefinite T by reducing it first; throws if out of range.
  const Rational& coefficient(const HalfIntegralForm& t) const;
  friend bool operator==(const FourierTable2&, const FourierTable2&) = default;
};

FourierTable2 siegel_eisenstein2(int k, long max_det);

}  // namespace siegel
