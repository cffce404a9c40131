#pragma once

#include "siegel/coeff_poly.hpp"
#include "siegel/links.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace siegel {

// Polynomial part of the derivative of the implicit prefactor
// delta^{-k} |delta|^{-2s} epsilon^s. Each term is keyed by (L1, L2) where L1
// carries the first symbol family and L2 the E symbols; L1 u L2 is always a
// perfect matching of `underlying`.
struct Expansion {
  enum class Basis {
    DeltaMinusE,  // L1 tagged (Delta - E); the canonical output basis
    Delta,        // L1 tagged Delta; the raw rule-cascade basis
  };
  using Key = std::pair<LinkSet, LinkSet>;

  Basis basis = Basis::DeltaMinusE;
  std::vector<Label> underlying;
  std::map<Key, CoeffPoly> terms;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

// Applies d^{L0} to the prefactor via the product rule and returns the result
// in the (Delta - E, E) basis. Links are applied in the given order; the result
// does not depend on it.
Expansion expand_operator(const LinkSet& l0);
Expansion expand_operator(const LinkSet& l0, const std::vector<Link>& application_order);

// Same cascade without the final Delta = (Delta - E) + E rewrite.
Expansion expand_operator_delta_basis(const LinkSet& l0,
                                      const std::vector<Link>& application_order);
Expansion expand_operator_delta_basis(const LinkSet& l0);

Expansion to_delta_minus_e_basis(const Expansion& delta_basis);

// c(L1, L2), or zero if absent. Throws unless L1 u L2 is a perfect matching of
// the expansion's underlying set.
CoeffPoly coefficient_lookup(const Expansion& e, const LinkSet& l1, const LinkSet& l2);

// Adds `scale * other` into `acc` (same underlying set and basis required).
void accumulate(Expansion& acc, const Expansion& other, const Rational& scale);

// Every term satisfies the matching-closure invariant.
bool satisfies_matching_closure(const Expansion& e);

template <class T>
using ComplexMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using ComplexVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
template <class T>
using RealMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

// The matrix symbols at a point: Delta(g,Z) = (CZ+D)^{-1} C and E = (2i)^{-1} Im(Z)^{-1}.
template <class T>
struct SymbolValues {
  std::complex<T> delta;    // det(CZ + D)
  T epsilon;                // det Im(Z)
  ComplexMatrix<T> Delta;
  ComplexMatrix<T> E;
};

// g is a real 2n x 2n matrix (A B; C D); Z is n x n complex symmetric.
// Throws DomainError if CZ+D is singular or Im(Z) is not positive definite.
template <class T>
SymbolValues<T> symbol_values(const RealMatrix<T>& g, const ComplexMatrix<T>& Z);

// Numeric instance of the expansion: Delta^{ab} -> v_a^t Delta v_b,
// E^{ab} -> v_a^t E v_b (bilinear, no conjugation), coefficients at (k, s).
template <class T>
std::complex<T> evaluate_expansion(const Expansion& e, const RealMatrix<T>& g,
                                   const ComplexMatrix<T>& Z, T k, std::complex<T> s,
                                   const std::map<Label, ComplexVector<T>>& vectors);

}  // namespace siegel
