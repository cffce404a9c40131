#include "siegel/link_calculus.hpp"

#include "siegel/error.hpp"

#include <algorithm>
#include <set>

namespace siegel {

namespace {

using TermMap = std::map<Expansion::Key, CoeffPoly>;

void add_to(TermMap& m, Expansion::Key key, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// -1/2 (X^{a c} X^{b d} + X^{a d} X^{b c}) for d^{ab} X^{cd}.
std::pair<std::pair<Link, Link>, std::pair<Link, Link>> split_link(const Link& op, const Link& target) {
  const Label& a = op.first();
  const Label& b = op.second();
  const Label& c = target.first();
  const Label& d = target.second();
  return {{Link(a, c), Link(b, d)}, {Link(a, d), Link(b, c)}};
}

TermMap apply_link(const TermMap& state, const Link& op) {
  static const Rational minus_half(-1, 2);
  const CoeffPoly d2_delta = -CoeffPoly::k() - CoeffPoly::s();
  const CoeffPoly d2_e = CoeffPoly::s();

  TermMap next;
  for (const auto& [key, coeff] : state) {
    const auto& [deltas, es] = key;
    for (const auto& l : deltas.links())
      if (l.contains(op.first()) || l.contains(op.second()))
        throw DomainError("a link derivative needs four distinct indices; " + op.to_string() +
                          " meets " + l.to_string());
    for (const auto& l : es.links())
      if (l.contains(op.first()) || l.contains(op.second()))
        throw DomainError("a link derivative needs four distinct indices; " + op.to_string() +
                          " meets " + l.to_string());

    // Derivative hitting the prefactor.
    add_to(next, {deltas.with(op), es}, coeff * d2_delta);
    add_to(next, {deltas, es.with(op)}, coeff * d2_e);

    // Derivative hitting one Delta factor.
    for (const auto& target : deltas.links()) {
      auto rest = deltas.without(target);
      auto [p1, p2] = split_link(op, target);
      CoeffPoly c = coeff * minus_half;
      add_to(next, {rest.with(p1.first).with(p1.second), es}, c);
      add_to(next, {rest.with(p2.first).with(p2.second), es}, c);
    }
    // Derivative hitting one E factor.
    for (const auto& target : es.links()) {
      auto rest = es.without(target);
      auto [p1, p2] = split_link(op, target);
      CoeffPoly c = coeff * minus_half;
      add_to(next, {deltas, rest.with(p1.first).with(p1.second)}, c);
      add_to(next, {deltas, rest.with(p2.first).with(p2.second)}, c);
    }
  }
  return next;
}

void check_order(const LinkSet& l0, const std::vector<Link>& order) {
  std::vector<Link> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != l0.links())
    throw DomainError("application order must be a permutation of the links of " + l0.to_string());
}

}  // namespace

Expansion expand_operator_delta_basis(const LinkSet& l0, const std::vector<Link>& application_order) {
  check_order(l0, application_order);
  TermMap state;
  state.emplace(Expansion::Key{}, CoeffPoly(1));
  for (const auto& op : application_order) state = apply_link(state, op);

  Expansion e;
  e.basis = Expansion::Basis::Delta;
  e.underlying = l0.labels();
  e.terms = std::move(state);
  return e;
}

Expansion expand_operator_delta_basis(const LinkSet& l0) {
  return expand_operator_delta_basis(l0, l0.links());
}

Expansion to_delta_minus_e_basis(const Expansion& delta_basis) {
  if (delta_basis.basis != Expansion::Basis::Delta)
    throw DomainError("to_delta_minus_e_basis expects a Delta-basis expansion");
  Expansion out;
  out.basis = Expansion::Basis::DeltaMinusE;
  out.underlying = delta_basis.underlying;
  for (const auto& [key, coeff] : delta_basis.terms) {
    const auto& deltas = key.first.links();
    const std::size_t r = deltas.size();
    // Delta = (Delta - E) + E, expanded over every subset kept as (Delta - E).
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      std::vector<Link> a_links;
      std::vector<Link> e_links = key.second.links();
      for (std::size_t i = 0; i < r; ++i) {
        if (mask & (std::size_t{1} << i)) a_links.push_back(deltas[i]);
        else e_links.push_back(deltas[i]);
      }
      add_to(out.terms, {LinkSet(std::move(a_links)), LinkSet(std::move(e_links))}, coeff);
    }
  }
  return out;
}

Expansion expand_operator(const LinkSet& l0, const std::vector<Link>& application_order) {
  return to_delta_minus_e_basis(expand_operator_delta_basis(l0, application_order));
}

Expansion expand_operator(const LinkSet& l0) { return expand_operator(l0, l0.links()); }

CoeffPoly coefficient_lookup(const Expansion& e, const LinkSet& l1, const LinkSet& l2) {
  std::vector<Label> used = l1.labels();
  auto more = l2.labels();
  used.insert(used.end(), more.begin(), more.end());
  std::sort(used.begin(), used.end());
  if (used != e.underlying)
    throw DomainError("(" + l1.to_string() + ", " + l2.to_string() +
                      ") is not a perfect matching of the underlying set");
  auto it = e.terms.find({l1, l2});
  return it == e.terms.end() ? CoeffPoly() : it->second;
}

void accumulate(Expansion& acc, const Expansion& other, const Rational& scale) {
  if (acc.underlying.empty() && acc.terms.empty()) {
    acc.underlying = other.underlying;
    acc.basis = other.basis;
  }
  if (acc.underlying != other.underlying || acc.basis != other.basis)
    throw DomainError("cannot add expansions over different underlying sets or bases");
  for (const auto& [key, c] : other.terms) add_to(acc.terms, key, c * scale);
}

bool satisfies_matching_closure(const Expansion& e) {
  for (const auto& [key, c] : e.terms) {
    auto used = key.first.labels();
    auto more = key.second.labels();
    used.insert(used.end(), more.begin(), more.end());
    std::sort(used.begin(), used.end());
    if (used != e.underlying) return false;
  }
  return true;
}

template <class T>
SymbolValues<T> symbol_values(const RealMatrix<T>& g, const ComplexMatrix<T>& Z) {
  const auto n = Z.rows();
  if (Z.cols() != n || g.rows() != 2 * n || g.cols() != 2 * n)
    throw DomainError("symbol_values: g must be 2n x 2n for an n x n point Z");
  RealMatrix<T> Y = Z.imag();
  Eigen::LLT<RealMatrix<T>> llt(Y);
  if (llt.info() != Eigen::Success)
    throw DomainError("Im(Z) is not positive definite");
  ComplexMatrix<T> C = g.block(n, 0, n, n).template cast<std::complex<T>>();
  ComplexMatrix<T> D = g.block(n, n, n, n).template cast<std::complex<T>>();
  ComplexMatrix<T> J = C * Z + D;
  Eigen::FullPivLU<ComplexMatrix<T>> lu(J);
  if (!lu.isInvertible()) throw DomainError("CZ + D is singular");

  SymbolValues<T> out;
  out.delta = lu.determinant();
  out.epsilon = Y.determinant();
  out.Delta = lu.solve(C);
  const std::complex<T> two_i(0, 2);
  out.E = (Y.inverse().template cast<std::complex<T>>()) / two_i;
  return out;
}

template <class T>
std::complex<T> evaluate_expansion(const Expansion& e, const RealMatrix<T>& g,
                                   const ComplexMatrix<T>& Z, T k, std::complex<T> s,
                                   const std::map<Label, ComplexVector<T>>& vectors) {
  const auto n = Z.rows();
  for (const auto& label : e.underlying) {
    auto it = vectors.find(label);
    if (it == vectors.end()) throw DomainError("no vector supplied for index " + label.to_string());
    if (it->second.size() != n) throw DomainError("vector for index " + label.to_string() + " has wrong length");
  }
  SymbolValues<T> sv = symbol_values(g, Z);
  ComplexMatrix<T> first = sv.Delta;
  if (e.basis == Expansion::Basis::DeltaMinusE) first -= sv.E;

  auto contract = [&](const ComplexMatrix<T>& m, const Link& l) {
    const auto& va = vectors.at(l.first());
    const auto& vb = vectors.at(l.second());
    return (va.transpose() * m * vb)(0, 0);
  };

  std::complex<T> total = 0;
  for (const auto& [key, coeff] : e.terms) {
    auto c = coeff.evaluate(static_cast<long double>(k),
                            std::complex<long double>(s.real(), s.imag()));
    std::complex<T> term(static_cast<T>(c.real()), static_cast<T>(c.imag()));
    for (const auto& l : key.first) term *= contract(first, l);
    for (const auto& l : key.second) term *= contract(sv.E, l);
    total += term;
  }
  return total;
}

template SymbolValues<double> symbol_values(const RealMatrix<double>&, const ComplexMatrix<double>&);
template SymbolValues<long double> symbol_values(const RealMatrix<long double>&,
                                                 const ComplexMatrix<long double>&);
template std::complex<double> evaluate_expansion(const Expansion&, const RealMatrix<double>&,
                                                 const ComplexMatrix<double>&, double,
                                                 std::complex<double>,
                                                 const std::map<Label, ComplexVector<double>>&);
template std::complex<long double> evaluate_expansion(
    const Expansion&, const RealMatrix<long double>&, const ComplexMatrix<long double>&,
    long double, std::complex<long double>, const std::map<Label, ComplexVector<long double>>&);

}  // namespace siegel
