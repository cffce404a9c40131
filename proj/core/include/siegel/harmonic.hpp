#pragma once

#include "siegel/coeff_poly.hpp"
#include "siegel/link_calculus.hpp"
#include "siegel/links.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

// X = (X1; X2) t(X1; X2) with X1 in M(p, d), X2 in M(q, d). `l` is the tensor
// degree of the starred and substarred representation spaces.
struct SplitShape {
  int p = 1;
  int q = 1;
  int d = 1;
  int l = 1;
  void validate() const;
  friend bool operator==(const SplitShape&, const SplitShape&) = default;
};

// Linear combination of link monomials X^L over starred/substarred labels.
class HarmonicPolynomial {
 public:
  HarmonicPolynomial() = default;
  explicit HarmonicPolynomial(SplitShape shape) : shape_(shape) {}

  const SplitShape& shape() const { return shape_; }
  const std::map<LinkSet, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const LinkSet& links, const Rational& c);
  // Underlying set shared by all monomials; throws if they disagree.
  std::vector<Label> underlying() const;
  int degree() const;
  // Labels must be starred or substarred and every term homogeneous.
  void validate() const;

  HarmonicPolynomial& operator+=(const HarmonicPolynomial& other);
  HarmonicPolynomial& operator*=(const Rational& c);
  friend HarmonicPolynomial operator+(HarmonicPolynomial a, const HarmonicPolynomial& b) { return a += b; }
  friend HarmonicPolynomial operator*(const Rational& c, HarmonicPolynomial a) { return a *= c; }
  friend bool operator==(const HarmonicPolynomial&, const HarmonicPolynomial&) = default;

  std::string to_string() const;

 private:
  SplitShape shape_;
  std::map<LinkSet, Rational> terms_;
};

// Polynomial in explicit variables x1[mu][kappa], x2[mu][kappa] and e^(alpha)_j.
// A monomial is the sorted multiset of its variable ids.
class ExplicitPolynomial {
 public:
  using Monomial = std::vector<std::uint16_t>;
  std::map<Monomial, Rational> terms;
  std::vector<std::string> variable_names;
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

struct HarmonicWitness {
  int block = 0;  // 1 for X1, 2 for X2
  int mu = 0;     // 1-based row indices
  int nu = 0;
  ExplicitPolynomial residual;
};

struct HarmonicCheck {
  bool ok = true;
  std::optional<HarmonicWitness> witness;
};

// Expands P in the entries of X1, X2 and the e-vectors and applies
// sum_kappa d^2/dx_{mu kappa} dx_{nu kappa} in both blocks. Pairs mu < nu are
// scanned before the diagonal ones; the first nonzero residual is reported.
HarmonicCheck check_pluriharmonic(const HarmonicPolynomial& poly);

// Explicit expansion of P (exposed for tests).
ExplicitPolynomial expand_explicit(const HarmonicPolynomial& poly);

// Formal Laplacian L_{ab} in the link basis for a pair of same-block labels:
// X^{ab} R -> d R, and X^{ac} X^{be} R -> X^{ce} R. Keyed by (a, b) with a < b.
std::map<std::pair<Label, Label>, std::map<LinkSet, Rational>>
link_laplacian(const HarmonicPolynomial& poly, int block);

struct HarmonicProjection {
  HarmonicPolynomial polynomial;
  // Set when P is nonzero but no harmonic element with the same mixed part
  // exists in the span of its underlying set; the polynomial is then zero.
  bool no_harmonic_completion = false;
};

// Keeps the monomials built only from mixed links and solves exactly for the
// star-star / substar-substar ("trace") monomials so that every block
// Laplacian vanishes. Requires deg P <= 3.
HarmonicProjection project_harmonic(const HarmonicPolynomial& poly);

// Q(X, s): coefficients are polynomials in k and s.
struct QPolynomial {
  std::vector<Label> underlying;
  std::map<LinkSet, CoeffPoly> terms;
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
  std::string to_string() const;
};

// P(d)(prefactor) = sum_L c(L) d^L(prefactor), in the (Delta - E, E) basis.
Expansion pullback_expansion(const HarmonicPolynomial& poly);

struct VanishingViolation {
  LinkSet l1;
  LinkSet l2;
  CoeffPoly coefficient;  // with k substituted
};

// Terms with L2 nonempty and free of mixed links whose coefficient, after
// substituting k, is not the zero polynomial in s.
std::vector<VanishingViolation> vanishing_violations(const Expansion& e, const Rational& k);

// Pure (Delta - E) part of pullback_expansion(P). With `validate`, first
// confirms P is pluri-harmonic (d = 2k, k = d/2) and then that every
// coefficient with nonempty, mixed-free L2 vanishes at that k; any failure
// throws DomainError naming the offending term. Validation requires
// min(p, q) >= l.
QPolynomial compute_Q(const HarmonicPolynomial& poly, bool validate);

// Frequently used inputs.
HarmonicPolynomial mixed_link_polynomial(SplitShape shape);             // X^{1*1_}
HarmonicPolynomial antisymmetric_degree_two(SplitShape shape);         // X^{1*1_}X^{2*2_} - X^{1*2_}X^{2*1_}
HarmonicPolynomial symmetric_degree_two(SplitShape shape);             // X^{1*1_}X^{2*2_} + X^{1*2_}X^{2*1_}

}  // namespace siegel
