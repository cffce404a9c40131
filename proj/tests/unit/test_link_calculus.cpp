#include "oracles/finite_difference.hpp"
#include "siegel/error.hpp"
#include "siegel/link_calculus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace siegel;

namespace {

const CoeffPoly K = CoeffPoly::k();
const CoeffPoly S = CoeffPoly::s();

LinkSet ls(const char* text) { return parse_link_set(text); }

// Hand-derived expansion of d^{(1,2)(3,4)}: only the six listed classes are
// pinned; the rest follow by the 1<->3 / 2<->4 symmetries checked separately.
struct HandEntry {
  const char* a;
  const char* e;
  CoeffPoly value;
};

std::vector<HandEntry> four_index_table() {
  const CoeffPoly ks = K + S;
  return {
      {"(1,2),(3,4)", "", ks * ks},
      {"(1,3),(2,4)", "", ks * Rational(1, 2)},
      {"", "(1,2),(3,4)", K * K},
      {"(1,2)", "(3,4)", K * ks},
      {"", "(1,3),(2,4)", K * Rational(1, 2)},
      {"(1,3)", "(2,4)", ks * Rational(1, 2)},
  };
}

}  // namespace

TEST(ExpandOperator, TwoIndexTable) {
  Expansion e = expand_operator(ls("(1,2)"));
  EXPECT_EQ(e.terms.size(), 2u);
  EXPECT_EQ(coefficient_lookup(e, ls("(1,2)"), ls("")), -K - S);
  EXPECT_EQ(coefficient_lookup(e, ls(""), ls("(1,2)")), -K);
}

TEST(ExpandOperator, FourIndexTable) {
  Expansion e = expand_operator(ls("(1,2),(3,4)"));
  for (const auto& h : four_index_table())
    EXPECT_EQ(coefficient_lookup(e, ls(h.a), ls(h.e)), h.value) << h.a << " | " << h.e;
}

TEST(ExpandOperator, EmptyProduct) {
  Expansion e = expand_operator(ls(""));
  ASSERT_EQ(e.terms.size(), 1u);
  EXPECT_EQ(coefficient_lookup(e, ls(""), ls("")), CoeffPoly(1));
}

TEST(ExpandOperator, CoefficientLookupRejectsNonMatching) {
  Expansion e = expand_operator(ls("(1,2),(3,4)"));
  EXPECT_THROW(coefficient_lookup(e, ls("(1,2)"), ls("")), DomainError);
  EXPECT_THROW(coefficient_lookup(e, ls("(1,2)"), ls("(1,3)")), DomainError);
}

TEST(ExpandOperator, MatchingClosureAndOrderIndependence) {
  const LinkSet l0 = ls("(1,2),(3,4),(5,6)");
  Expansion reference = expand_operator(l0);
  EXPECT_TRUE(satisfies_matching_closure(reference));
  std::vector<Link> order(l0.begin(), l0.end());
  std::sort(order.begin(), order.end());
  do {
    EXPECT_EQ(expand_operator(l0, order), reference);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(ExpandOperator, RelabelingEquivariance) {
  const LinkSet l0 = ls("(1,2),(3,4)");
  const std::vector<std::pair<Label, Label>> perm{{Label::plain(1), Label::plain(3)},
                                                  {Label::plain(2), Label::plain(1)},
                                                  {Label::plain(3), Label::plain(4)},
                                                  {Label::plain(4), Label::plain(2)}};
  Expansion e = expand_operator(l0);
  Expansion f = expand_operator(l0.relabeled(perm));
  ASSERT_EQ(e.terms.size(), f.terms.size());
  for (const auto& [key, c] : e.terms)
    EXPECT_EQ(coefficient_lookup(f, key.first.relabeled(perm), key.second.relabeled(perm)), c);
}

TEST(ExpandOperator, SZeroSpecialization) {
  for (const char* text : {"(1,2)", "(1,2),(3,4)", "(1,2),(3,4),(5,6)"}) {
    const LinkSet l0 = ls(text);
    Expansion raw = expand_operator_delta_basis(l0);
    for (const auto& [key, c] : raw.terms) {
      if (key.second.empty()) continue;
      for (const auto& [exps, v] : c.terms()) EXPECT_GE(exps.second, 1) << text << " " << c.to_string();
    }
    // The full Delta^{L0} monomial only comes from differentiating the prefactor r times.
    const Rational r(static_cast<long>(l0.size()));
    CoeffPoly lead = coefficient_lookup(raw, l0, ls(""));
    for (int kv = 2; kv <= 12; kv += 2)
      EXPECT_EQ(lead.evaluate(Rational(kv), Rational(0)), rational_pow(Rational(-kv), static_cast<long>(l0.size())));
  }
}

TEST(ExpandOperator, DeltaBasisRoundTrip) {
  const LinkSet l0 = ls("(1,2),(3,4)");
  EXPECT_EQ(to_delta_minus_e_basis(expand_operator_delta_basis(l0)), expand_operator(l0));
}

TEST(EvaluateExpansion, EmptyIsOne) {
  Expansion e = expand_operator(ls(""));
  RealMatrix<double> g = RealMatrix<double>::Identity(4, 4);
  ComplexMatrix<double> z = ComplexMatrix<double>::Identity(2, 2) * std::complex<double>(0, 1);
  EXPECT_NEAR(std::abs(evaluate_expansion<double>(e, g, z, 6.0, {0.7, 0}, {}) - 1.0), 0.0, 1e-15);
}

TEST(EvaluateExpansion, IdentityKillsDelta) {
  Expansion e = expand_operator_delta_basis(ls("(1,2)"));
  RealMatrix<double> g = RealMatrix<double>::Identity(2, 2);
  ComplexMatrix<double> z(1, 1);
  z(0, 0) = {0.3, 1.7};
  ComplexVector<double> v(1);
  v(0) = 1.0;
  std::map<Label, ComplexVector<double>> vecs{{Label::plain(1), v}, {Label::plain(2), v}};
  const double s = 0.7, k = 6;
  // Only s E^{12} survives; E = 1/(2i y).
  const std::complex<double> expected = s / (std::complex<double>(0, 2) * 1.7);
  EXPECT_NEAR(std::abs(evaluate_expansion<double>(e, g, z, k, {s, 0}, vecs) - expected), 0.0, 1e-14);
}

TEST(EvaluateExpansion, RejectsBadPoints) {
  Expansion e = expand_operator(ls("(1,2)"));
  RealMatrix<double> g = RealMatrix<double>::Identity(4, 4);
  ComplexVector<double> v = ComplexVector<double>::Ones(2);
  std::map<Label, ComplexVector<double>> vecs{{Label::plain(1), v}, {Label::plain(2), v}};
  ComplexMatrix<double> lower = ComplexMatrix<double>::Identity(2, 2) * std::complex<double>(0, -1);
  EXPECT_THROW(evaluate_expansion<double>(e, g, lower, 6.0, {0, 0}, vecs), DomainError);
  // C = D = 0 makes CZ + D singular.
  RealMatrix<double> degenerate = RealMatrix<double>::Zero(4, 4);
  ComplexMatrix<double> z = ComplexMatrix<double>::Identity(2, 2) * std::complex<double>(0, 1);
  EXPECT_THROW(evaluate_expansion<double>(e, degenerate, z, 6.0, {0, 0}, vecs), DomainError);
}

class FiniteDifference : public ::testing::TestWithParam<const char*> {};

TEST_P(FiniteDifference, MatchesOracle) {
  using namespace siegel::oracle;
  std::mt19937_64 rng(20240611);
  const LinkSet l0 = ls(GetParam());
  const Expansion e = expand_operator(l0);
  const ld k = 6;
  for (cld s : {cld(0, 0), cld(0.7L, 0), cld(1.3L, 0.4L)}) {
    for (int trial = 0; trial < 3; ++trial) {
      Sample smp = random_sample(rng, 2);
      std::map<Label, ComplexVector<ld>> vecs;
      for (const auto& lab : l0.labels()) vecs[lab] = random_vector(rng, 2);
      std::vector<CMat> dirs;
      for (const auto& l : l0) dirs.push_back(direction(vecs[l.first()], vecs[l.second()]));
      auto f = [&](const CMat& z) { return prefactor(smp.g, z, k, s); };
      const cld fd = mixed_derivative(f, smp.z, dirs, dirs.size(), 1e-5L);
      const cld engine = evaluate_expansion<ld>(e, smp.g, smp.z, k, s, vecs) * prefactor(smp.g, smp.z, k, s);
      EXPECT_LT(std::abs(fd - engine) / std::abs(fd), 1e-6L) << GetParam() << " s=" << s.real() << "+" << s.imag() << "i";
    }
  }
}

INSTANTIATE_TEST_SUITE_P(LinkSets, FiniteDifference, ::testing::Values("(1,2)", "(1,2),(3,4)", "(1,3),(2,4)"));
