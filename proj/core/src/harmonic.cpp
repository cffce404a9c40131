#include "siegel/harmonic.hpp"

#include "siegel/error.hpp"
#include "siegel/exact_linalg.hpp"

#include <algorithm>
#include <set>

namespace siegel {

void SplitShape::validate() const {
  if (p < 1 || q < 1) throw DomainError("split shape needs p >= 1 and q >= 1");
  if (d < 1) throw DomainError("split shape needs d >= 1");
  if (l < 1) throw DomainError("split shape needs l >= 1");
}

void HarmonicPolynomial::add_term(const LinkSet& links, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(links, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Label> HarmonicPolynomial::underlying() const {
  if (terms_.empty()) return {};
  auto first = terms_.begin()->first.labels();
  for (const auto& [links, c] : terms_)
    if (links.labels() != first)
      throw DomainError("polynomial is not homogeneous: " + links.to_string() +
                        " has a different underlying set");
  return first;
}

int HarmonicPolynomial::degree() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

void HarmonicPolynomial::validate() const {
  shape_.validate();
  for (const auto& label : underlying())
    if (label.kind == Label::Kind::Plain)
      throw DomainError("label " + label.to_string() + " is neither starred nor substarred");
}

HarmonicPolynomial& HarmonicPolynomial::operator+=(const HarmonicPolynomial& other) {
  if (!(shape_ == other.shape_)) throw DomainError("cannot add polynomials of different shapes");
  for (const auto& [links, c] : other.terms_) add_term(links, c);
  return *this;
}

HarmonicPolynomial& HarmonicPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [links, v] : terms_) v *= c;
  return *this;
}

std::string HarmonicPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [links, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out += siegel::to_string(mag) + "*";
    for (const auto& l : links) out += "X" + l.to_string();
  }
  return out;
}

std::string ExplicitPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    Rational mag = abs(c);
    std::string vars;
    for (auto v : mono) {
      if (!vars.empty()) vars += "*";
      vars += v < variable_names.size() ? variable_names[v] : "v" + std::to_string(v);
    }
    if (vars.empty()) out += siegel::to_string(mag);
    else if (mag == 1) out += vars;
    else out += siegel::to_string(mag) + "*" + vars;
  }
  return out;
}

namespace {

using Monomial = ExplicitPolynomial::Monomial;
using SparseTerms = std::map<Monomial, Rational>;

void add_sparse(SparseTerms& t, Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SparseTerms multiply(const SparseTerms& a, const SparseTerms& b) {
  SparseTerms out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_sparse(out, merge(ma, mb), ca * cb);
  return out;
}

class VariableLayout {
 public:
  VariableLayout(const SplitShape& shape, const std::vector<Label>& labels)
      : shape_(shape), labels_(labels), max_dim_(std::max(shape.p, shape.q)) {
    if (static_cast<long>(shape.p + shape.q) * shape.d + static_cast<long>(labels.size()) * max_dim_ > 65535)
      throw DomainError("explicit expansion too large for this shape");
  }

  std::uint16_t x(int block, int mu, int kappa) const {
    int base = block == 1 ? 0 : shape_.p * shape_.d;
    return static_cast<std::uint16_t>(base + mu * shape_.d + kappa);
  }
  std::uint16_t e(const Label& label, int j) const {
    auto pos = std::find(labels_.begin(), labels_.end(), label) - labels_.begin();
    return static_cast<std::uint16_t>((shape_.p + shape_.q) * shape_.d + pos * max_dim_ + j);
  }
  int block_of(const Label& label) const { return label.kind == Label::Kind::Star ? 1 : 2; }
  int dim(int block) const { return block == 1 ? shape_.p : shape_.q; }

  std::vector<std::string> names() const {
    std::vector<std::string> n(static_cast<std::size_t>((shape_.p + shape_.q) * shape_.d) +
                               labels_.size() * static_cast<std::size_t>(max_dim_));
    for (int b = 1; b <= 2; ++b)
      for (int mu = 0; mu < dim(b); ++mu)
        for (int k = 0; k < shape_.d; ++k)
          n[x(b, mu, k)] = "x" + std::to_string(b) + "[" + std::to_string(mu + 1) + "," + std::to_string(k + 1) + "]";
    for (const auto& l : labels_)
      for (int j = 0; j < max_dim_; ++j)
        n[e(l, j)] = "e(" + l.to_string() + ")_" + std::to_string(j + 1);
    return n;
  }

  // X^{ab} = sum_kappa u_a,kappa u_b,kappa with u_a = X_block(a)^t e^(a).
  SparseTerms link(const Link& link) const {
    const Label& a = link.first();
    const Label& b = link.second();
    int ba = block_of(a), bb = block_of(b);
    SparseTerms out;
    for (int kappa = 0; kappa < shape_.d; ++kappa)
      for (int mu = 0; mu < dim(ba); ++mu)
        for (int nu = 0; nu < dim(bb); ++nu) {
          Monomial m{e(a, mu), e(b, nu), x(ba, mu, kappa), x(bb, nu, kappa)};
          std::sort(m.begin(), m.end());
          add_sparse(out, std::move(m), 1);
        }
    return out;
  }

 private:
  SplitShape shape_;
  std::vector<Label> labels_;
  int max_dim_;
};

// Removes one copy of v; returns its multiplicity before removal (0 if absent).
int remove_one(Monomial& m, std::uint16_t v) {
  auto range = std::equal_range(m.begin(), m.end(), v);
  int count = static_cast<int>(range.second - range.first);
  if (count > 0) m.erase(range.first);
  return count;
}

SparseTerms block_laplacian(const SparseTerms& poly, const VariableLayout& layout, int block,
                            int mu, int nu, int d) {
  SparseTerms out;
  for (const auto& [mono, c] : poly) {
    for (int kappa = 0; kappa < d; ++kappa) {
      Monomial m1 = mono;
      int e1 = remove_one(m1, layout.x(block, mu, kappa));
      if (e1 == 0) continue;
      int e2 = remove_one(m1, layout.x(block, nu, kappa));
      if (e2 == 0) continue;
      add_sparse(out, std::move(m1), c * e1 * e2);
    }
  }
  return out;
}

}  // namespace

ExplicitPolynomial expand_explicit(const HarmonicPolynomial& poly) {
  poly.validate();
  const auto labels = poly.underlying();
  VariableLayout layout(poly.shape(), labels);
  std::map<Link, SparseTerms> link_cache;
  SparseTerms total;
  for (const auto& [links, c] : poly.terms()) {
    SparseTerms product{{Monomial{}, Rational(1)}};
    for (const auto& l : links) {
      auto it = link_cache.find(l);
      if (it == link_cache.end()) it = link_cache.emplace(l, layout.link(l)).first;
      product = multiply(product, it->second);
    }
    for (auto& [m, v] : product) add_sparse(total, m, v * c);
  }
  ExplicitPolynomial out;
  out.terms = std::move(total);
  out.variable_names = layout.names();
  return out;
}

HarmonicCheck check_pluriharmonic(const HarmonicPolynomial& poly) {
  poly.validate();
  const auto labels = poly.underlying();
  VariableLayout layout(poly.shape(), labels);
  ExplicitPolynomial expanded = expand_explicit(poly);
  const int d = poly.shape().d;

  for (int block = 1; block <= 2; ++block) {
    const int dim = layout.dim(block);
    std::vector<std::pair<int, int>> pairs;
    for (int mu = 0; mu < dim; ++mu)
      for (int nu = mu + 1; nu < dim; ++nu) pairs.emplace_back(mu, nu);
    for (int mu = 0; mu < dim; ++mu) pairs.emplace_back(mu, mu);
    for (auto [mu, nu] : pairs) {
      SparseTerms residual = block_laplacian(expanded.terms, layout, block, mu, nu, d);
      if (!residual.empty()) {
        HarmonicWitness w;
        w.block = block;
        w.mu = mu + 1;
        w.nu = nu + 1;
        w.residual.terms = std::move(residual);
        w.residual.variable_names = expanded.variable_names;
        return {false, std::move(w)};
      }
    }
  }
  return {true, std::nullopt};
}

std::map<std::pair<Label, Label>, std::map<LinkSet, Rational>>
link_laplacian(const HarmonicPolynomial& poly, int block) {
  const Label::Kind kind = block == 1 ? Label::Kind::Star : Label::Kind::Sub;
  std::vector<Label> block_labels;
  for (const auto& l : poly.underlying())
    if (l.kind == kind) block_labels.push_back(l);
  const Rational d(poly.shape().d);

  std::map<std::pair<Label, Label>, std::map<LinkSet, Rational>> out;
  for (std::size_t i = 0; i < block_labels.size(); ++i)
    for (std::size_t j = i + 1; j < block_labels.size(); ++j) {
      const Label& a = block_labels[i];
      const Label& b = block_labels[j];
      auto& image = out[{a, b}];
      auto add = [&image](const LinkSet& key, const Rational& c) {
        auto [it, inserted] = image.try_emplace(key, c);
        if (!inserted) {
          it->second += c;
          if (it->second == 0) image.erase(it);
        }
      };
      for (const auto& [links, c] : poly.terms()) {
        Link ab(a, b);
        if (links.contains(ab)) {
          add(links.without(ab), c * d);
        } else {
          const Link la = links.link_of(a);
          const Link lb = links.link_of(b);
          add(links.without(la).without(lb).with(Link(la.partner(a), lb.partner(b))), c);
        }
      }
      if (image.empty()) out.erase({a, b});
    }
  return out;
}

HarmonicProjection project_harmonic(const HarmonicPolynomial& poly) {
  poly.validate();
  if (poly.degree() > 3) throw DomainError("project_harmonic supports degree <= 3");
  HarmonicProjection result;
  result.polynomial = HarmonicPolynomial(poly.shape());
  if (poly.is_zero()) return result;

  const auto labels = poly.underlying();
  const auto span = perfect_matchings(labels);
  std::vector<LinkSet> fixed, unknown;
  for (const auto& m : span) {
    bool all_mixed = std::all_of(m.begin(), m.end(), [](const Link& l) { return l.is_mixed(); });
    (all_mixed ? fixed : unknown).push_back(m);
  }
  auto coefficient_in_p = [&](const LinkSet& m) {
    auto it = poly.terms().find(m);
    return it == poly.terms().end() ? Rational(0) : it->second;
  };

  // Laplacian image of each basis monomial, flattened to (block, a, b, target) rows.
  using RowKey = std::tuple<int, Label, Label, LinkSet>;
  std::map<RowKey, std::size_t> row_index;
  auto images = [&](const LinkSet& m) {
    HarmonicPolynomial single(poly.shape());
    single.add_term(m, 1);
    std::map<RowKey, Rational> out;
    for (int block = 1; block <= 2; ++block)
      for (const auto& [pair, image] : link_laplacian(single, block))
        for (const auto& [target, c] : image) {
          RowKey key{block, pair.first, pair.second, target};
          row_index.try_emplace(key, row_index.size());
          out[key] = c;
        }
    return out;
  };
  std::vector<std::map<RowKey, Rational>> unknown_images, fixed_images;
  for (const auto& m : unknown) unknown_images.push_back(images(m));
  for (const auto& m : fixed) fixed_images.push_back(images(m));

  const std::size_t rows = row_index.size();
  RationalMatrix a(rows, std::vector<Rational>(unknown.size(), Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  for (std::size_t u = 0; u < unknown.size(); ++u)
    for (const auto& [key, c] : unknown_images[u]) a[row_index.at(key)][u] = c;
  for (std::size_t f = 0; f < fixed.size(); ++f) {
    Rational cf = coefficient_in_p(fixed[f]);
    if (cf == 0) continue;
    for (const auto& [key, c] : fixed_images[f]) b[row_index.at(key)] -= cf * c;
  }

  std::vector<Rational> defaults;
  for (const auto& m : unknown) defaults.push_back(coefficient_in_p(m));
  LinearSolution sol = rows == 0 ? LinearSolution{true, 0, 0, defaults, {}, std::nullopt}
                                 : solve_linear(a, b, &defaults);
  if (!sol.consistent) {
    result.no_harmonic_completion = true;
    return result;
  }
  for (const auto& m : fixed) result.polynomial.add_term(m, coefficient_in_p(m));
  for (std::size_t u = 0; u < unknown.size(); ++u) result.polynomial.add_term(unknown[u], sol.x[u]);
  if (result.polynomial.is_zero()) result.no_harmonic_completion = true;
  return result;
}

std::string QPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [links, c] : terms) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")*";
    for (const auto& l : links) out += "X" + l.to_string();
  }
  return out;
}

Expansion pullback_expansion(const HarmonicPolynomial& poly) {
  poly.validate();
  Expansion total;
  total.underlying = poly.underlying();
  for (const auto& [links, c] : poly.terms()) accumulate(total, expand_operator(links), c);
  return total;
}

std::vector<VanishingViolation> vanishing_violations(const Expansion& e, const Rational& k) {
  std::vector<VanishingViolation> out;
  for (const auto& [key, c] : e.terms) {
    const auto& [l1, l2] = key;
    if (l2.empty()) continue;
    bool has_mixed = std::any_of(l2.begin(), l2.end(), [](const Link& l) { return l.is_mixed(); });
    if (has_mixed) continue;
    CoeffPoly at_k = c.substitute_k(k);
    if (!at_k.is_zero()) out.push_back({l1, l2, at_k});
  }
  return out;
}

QPolynomial compute_Q(const HarmonicPolynomial& poly, bool validate) {
  poly.validate();
  if (validate) {
    const auto& sh = poly.shape();
    if (std::min(sh.p, sh.q) < sh.l)
      throw DomainError("vanishing validation requires min(p, q) >= l");
    if (sh.d % 2 != 0) throw DomainError("vanishing validation requires d = 2k with k an integer");
    HarmonicCheck check = check_pluriharmonic(poly);
    if (!check.ok)
      throw DomainError("input is not pluri-harmonic: block " + std::to_string(check.witness->block) +
                        ", (mu,nu)=(" + std::to_string(check.witness->mu) + "," +
                        std::to_string(check.witness->nu) + "), residual " +
                        check.witness->residual.to_string());
  }
  Expansion e = pullback_expansion(poly);
  if (validate) {
    Rational k(poly.shape().d, 2);
    auto bad = vanishing_violations(e, k);
    if (!bad.empty())
      throw DomainError("non-mixed E coefficient does not vanish at k=" + siegel::to_string(k) +
                        ": L1=" + bad.front().l1.to_string() + " L2=" + bad.front().l2.to_string() +
                        " coefficient " + bad.front().coefficient.to_string());
  }
  QPolynomial q;
  q.underlying = e.underlying;
  for (const auto& [key, c] : e.terms)
    if (key.second.empty()) q.terms.emplace(key.first, c);
  return q;
}

HarmonicPolynomial mixed_link_polynomial(SplitShape shape) {
  HarmonicPolynomial p(shape);
  p.add_term(LinkSet({Link(Label::star(1), Label::sub(1))}), 1);
  return p;
}

namespace {
HarmonicPolynomial degree_two(SplitShape shape, const Rational& sign) {
  HarmonicPolynomial p(shape);
  p.add_term(LinkSet({Link(Label::star(1), Label::sub(1)), Link(Label::star(2), Label::sub(2))}), 1);
  p.add_term(LinkSet({Link(Label::star(1), Label::sub(2)), Link(Label::star(2), Label::sub(1))}), sign);
  return p;
}
}  // namespace

HarmonicPolynomial antisymmetric_degree_two(SplitShape shape) { return degree_two(shape, -1); }
HarmonicPolynomial symmetric_degree_two(SplitShape shape) { return degree_two(shape, 1); }

}  // namespace siegel
