#include "oracles/hurwitz.hpp"
#include "siegel/arith.hpp"
#include "siegel/eisenstein2.hpp"

#include <gtest/gtest.h>

using namespace siegel;

TEST(Arith, PrimesAndDivisors) {
  EXPECT_EQ(primes_up_to(20), (std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(divisor_sigma(3, 6), Integer(1 + 8 + 27 + 216));
}

TEST(Arith, Bernoulli) {
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli_polynomial(2, Rational(1, 3)), Rational(1, 9) - Rational(1, 3) + Rational(1, 6));
}

TEST(Arith, ZetaAtNegativeIntegers) {
  EXPECT_EQ(zeta_one_minus(2), Rational(-1, 12));
  EXPECT_EQ(zeta_one_minus(4), Rational(1, 120));
  EXPECT_EQ(zeta_one_minus(6), Rational(-1, 252));
  EXPECT_EQ(zeta_one_minus(1), Rational(-1, 2));
}

TEST(Arith, Kronecker) {
  EXPECT_EQ(kronecker(-4, 3), -1);
  EXPECT_EQ(kronecker(-4, 5), 1);
  EXPECT_EQ(kronecker(-3, 2), -1);
  EXPECT_EQ(kronecker(5, 2), -1);
  EXPECT_EQ(kronecker(-7, 2), 1);
  EXPECT_EQ(kronecker(-4, 2), 0);
}

TEST(CohenH, SmallValues) {
  EXPECT_EQ(cohen_H(1, 3), Rational(1, 3));
  EXPECT_EQ(cohen_H(1, 4), Rational(1, 2));
  EXPECT_EQ(cohen_H(1, 0), Rational(-1, 12));
  EXPECT_EQ(cohen_H(3, 3), Rational(-2, 9));
  EXPECT_EQ(cohen_H(3, 1), 0);
  EXPECT_EQ(cohen_H(3, 2), 0);
}

TEST(CohenH, EvenIndexUsesSignedResidues) {
  // Coefficients of the weight-5/2 Cohen Eisenstein series.
  EXPECT_EQ(cohen_H(2, 0), Rational(1, 120));
  EXPECT_EQ(cohen_H(2, 1), Rational(-1, 12));
  EXPECT_EQ(cohen_H(2, 4), Rational(-7, 12));
  EXPECT_EQ(cohen_H(2, 5), Rational(-2, 5));
  EXPECT_EQ(cohen_H(2, 8), -1);
  EXPECT_EQ(cohen_H(2, 9), Rational(-25, 12));
  EXPECT_EQ(cohen_H(2, 2), 0);
  EXPECT_EQ(cohen_H(2, 3), 0);
}

TEST(CohenH, MatchesHurwitzClassNumbers) {
  for (long n = 1; n <= 300; ++n) EXPECT_EQ(cohen_H(1, n), oracle::hurwitz_class_number(n)) << n;
}
