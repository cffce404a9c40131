#include "siegel/arith.hpp"
#include "siegel/error.hpp"
#include "siegel/modular.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <cmath>

using namespace siegel;

namespace {

const BasisForm& find_tag(const std::vector<BasisForm>& basis, FormTag tag) {
  for (const auto& b : basis)
    if (b.tag == tag) return b;
  throw std::runtime_error("tag not found");
}

}  // namespace

TEST(QExpBasis, WeightFour) {
  auto basis = qexp_basis(4, 10);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].form[1], 240);
  EXPECT_EQ(basis[0].form[2], 2160);
  for (long n = 1; n <= 10; ++n) EXPECT_EQ(basis[0].form[n], 240 * divisor_sigma(3, n));
}

TEST(QExpBasis, WeightTwelveCuspForm) {
  auto basis = qexp_basis(12, 30);
  ASSERT_EQ(basis.size(), 2u);
  const auto& delta = find_tag(basis, FormTag::CuspEigenform);
  EXPECT_EQ(delta.name, "Delta");
  EXPECT_EQ(delta.form[1], 1);
  EXPECT_EQ(delta.form[2], -24);
  EXPECT_EQ(delta.form[3], 252);
  EXPECT_EQ(delta.form[6], delta.form[2] * delta.form[3]);
  auto tau = ramanujan_tau(30);
  for (long n = 0; n <= 30; ++n) EXPECT_EQ(delta.form[n], tau[n]);
}

TEST(QExpBasis, DimensionsAndUnsupportedWeights) {
  const std::map<int, std::size_t> dims{{4, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 2}, {14, 1},
                                        {16, 2}, {18, 2}, {20, 2}, {22, 2}};
  for (auto [k, dim] : dims) EXPECT_EQ(qexp_basis(k, 6).size(), dim) << k;
  EXPECT_THROW(qexp_basis(2, 6), DomainError);
  EXPECT_THROW(qexp_basis(24, 6), DomainError);
  EXPECT_THROW(qexp_basis(7, 6), DomainError);
}

TEST(QExpBasis, EigenformMultiplicativity) {
  for (int k = 12; k <= 22; k += 2) {
    for (const auto& bf : qexp_basis(k, 60)) {
      const auto& a = bf.form;
      const Rational a1 = a[1];
      for (long m = 1; m <= 60; ++m)
        for (long n = 1; m * n <= 60; ++n)
          if (std::gcd(m, n) == 1) EXPECT_EQ(a[m * n] * a1, a[m] * a[n]) << bf.name;
      const Rational pk = rational_pow(Rational(2), k - 1);
      for (long r = 1; (1L << (r + 1)) <= 60; ++r)
        EXPECT_EQ(a[1L << (r + 1)] * a1, a[2] * a[1L << r] - pk * a[1L << (r - 1)] * a1) << bf.name;
    }
  }
}

TEST(CuspEigenform, WeightSixteen) {
  auto f = cusp_eigenform(16, 10);
  EXPECT_EQ(f.form[1], 1);
  EXPECT_EQ(f.form[2], 216);  // Delta * E4
  EXPECT_THROW(cusp_eigenform(14, 10), DomainError);
}

TEST(NormalizedPrimeCoefficients, AgreeWithExact) {
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 97};
  for (int k : {12, 16, 22}) {
    auto exact = cusp_eigenform(k, 100);
    auto approx = normalized_prime_coefficients(k, primes);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const long double expected =
          to_long_double(exact.form[primes[i]]) / std::pow(static_cast<long double>(primes[i]), (k - 1) / 2.0L);
      EXPECT_NEAR(static_cast<double>(approx[i]), static_cast<double>(expected), 1e-12) << k << " " << primes[i];
      EXPECT_LE(std::fabs(approx[i]), 2.0L);
    }
  }
}

TEST(Satake, SymmetricPoint) {
  SatakeData s = satake(12, 2, Rational(0));
  EXPECT_NEAR(std::abs(s.alpha - std::complex<long double>(0, 1)), 0.0L, 1e-15L);
  EXPECT_EQ(s.beta, -2);
  EXPECT_EQ(s.min_poly(), "X^2 + 1");
}

TEST(Satake, DeltaAtTwo) {
  SatakeData s = satake(12, 2, Rational(-24));
  // alpha + 1/alpha = -24 / 2^{11/2}
  const long double c = -24.0L / std::pow(2.0L, 5.5L);
  EXPECT_NEAR(static_cast<double>((s.alpha + 1.0L / s.alpha).real()), static_cast<double>(c), 1e-15);
  EXPECT_EQ(s.beta, make_rational(576, 2048) - 2);
  EXPECT_NEAR(static_cast<double>(std::abs(s.alpha)), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(std::abs(s.alpha * std::conj(s.alpha) - 1.0L)), 0.0, 1e-12);
}

TEST(Satake, UnitCircleForAllEigenforms) {
  for (int k : {12, 16, 18, 20, 22}) {
    auto f = cusp_eigenform(k, 50);
    for (const auto& [p, ap] : f.hecke_eigenvalues) {
      SatakeData s = satake(k, p, ap);
      EXPECT_NEAR(static_cast<double>(std::abs(s.alpha)), 1.0, 1e-9) << k << " " << p;
      const auto other = 1.0L / s.alpha;
      EXPECT_NEAR(static_cast<double>(std::abs(s.alpha * other - 1.0L)), 0.0, 1e-12);
    }
  }
}

TEST(HeckeDoubleCoset, IdentityAndBasics) {
  auto delta = cusp_eigenform(12, 60);
  EXPECT_EQ(hecke_doublecoset_eigenvalue(delta.form, 1).value, 1);
  // lambda(2) = 2^{2-k}(a_2^2 - 2^{k-1} - 2^{k-2})
  EXPECT_EQ(hecke_doublecoset_eigenvalue(delta.form, 2).value, Rational(-39, 16));
  EXPECT_THROW(hecke_doublecoset_eigenvalue(delta.form, 7), DomainError);  // truncation too small
}

TEST(HeckeDoubleCoset, RejectsNonEigenforms) {
  auto basis = qexp_basis(12, 60);
  QExpansion1 mix = basis[0].form + basis[1].form;
  EXPECT_THROW(hecke_doublecoset_eigenvalue(mix, 2), DomainError);
}

TEST(HeckeDoubleCoset, EisensteinPrimeFormula) {
  for (int k : {4, 6, 8}) {
    auto e = eisenstein_series(k, 60);
    for (long p : {2L, 3L, 5L}) {
      const Rational a = divisor_sigma(k - 1, p);
      const Rational pk = rational_pow(Rational(p), k - 1), pk2 = rational_pow(Rational(p), k - 2);
      EXPECT_EQ(hecke_doublecoset_eigenvalue(e, p).value, rational_pow(Rational(p), 2 - k) * (a * a - pk - pk2));
    }
  }
}

TEST(Petersson, DeltaTwoMethodsAndScaling) {
  auto delta = cusp_eigenform(12, 40);
  auto m1 = petersson_norm_numeric(delta.form, 1e-8L);
  auto m2 = petersson_norm_direct(delta.form, 1e-6L);
  EXPECT_NEAR(static_cast<double>(m1.value), 1.03536205680e-6, 1e-15);
  EXPECT_LT(std::fabs(m1.value - m2.value) / m1.value, 1e-4L);
  auto m20 = petersson_norm_numeric(cusp_eigenform(12, 20).form, 1e-8L);
  EXPECT_LT(std::fabs(m1.value - m20.value) / m1.value, 1e-6L);
  auto doubled = petersson_norm_numeric(Rational(2) * delta.form, 1e-8L);
  EXPECT_NEAR(static_cast<double>(doubled.value / m1.value), 4.0, 1e-12);
}

TEST(Petersson, RejectsNonCusp) {
  EXPECT_THROW(petersson_norm_numeric(eisenstein_series(12, 10), 1e-6L), DomainError);
}
