#include "siegel/links.hpp"

#include "siegel/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace siegel {

std::string Label::to_string() const {
  std::string s = std::to_string(index);
  if (kind == Kind::Star) s += "*";
  if (kind == Kind::Sub) s += "_";
  return s;
}

Label parse_label(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  Label::Kind kind = Label::Kind::Plain;
  if (!t.empty() && t.back() == '*') {
    kind = Label::Kind::Star;
    t.pop_back();
  } else if (!t.empty() && t.back() == '_') {
    kind = Label::Kind::Sub;
    t.pop_back();
  }
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("malformed index label '" + std::string(text) + "'");
  int index = std::stoi(t);
  if (index < 1) throw DomainError("index labels start at 1, got '" + std::string(text) + "'");
  return {kind, index};
}

Link::Link(Label a, Label b) {
  if (a == b) throw DomainError("a link needs two distinct indices, got " + a.to_string() + " twice");
  first_ = std::min(a, b);
  second_ = std::max(a, b);
}

bool Link::is_mixed() const {
  return (first_.kind == Label::Kind::Star && second_.kind == Label::Kind::Sub) ||
         (first_.kind == Label::Kind::Sub && second_.kind == Label::Kind::Star);
}
bool Link::is_star_star() const {
  return first_.kind == Label::Kind::Star && second_.kind == Label::Kind::Star;
}
bool Link::is_sub_sub() const {
  return first_.kind == Label::Kind::Sub && second_.kind == Label::Kind::Sub;
}

std::string Link::to_string() const {
  return "(" + first_.to_string() + "," + second_.to_string() + ")";
}

LinkSet::LinkSet(std::vector<Link> links) : links_(std::move(links)) {
  std::sort(links_.begin(), links_.end());
  std::set<Label> seen;
  for (const auto& l : links_) {
    if (!seen.insert(l.first()).second || !seen.insert(l.second()).second)
      throw DomainError("link set " + to_string() + " repeats an index");
  }
}

std::vector<Label> LinkSet::labels() const {
  std::vector<Label> out;
  out.reserve(2 * links_.size());
  for (const auto& l : links_) {
    out.push_back(l.first());
    out.push_back(l.second());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LinkSet::contains(const Link& link) const {
  return std::binary_search(links_.begin(), links_.end(), link);
}

bool LinkSet::uses(const Label& label) const {
  return std::any_of(links_.begin(), links_.end(), [&](const Link& l) { return l.contains(label); });
}

const Link& LinkSet::link_of(const Label& label) const {
  return *std::find_if(links_.begin(), links_.end(), [&](const Link& l) { return l.contains(label); });
}

LinkSet LinkSet::with(const Link& link) const {
  auto v = links_;
  v.push_back(link);
  return LinkSet(std::move(v));
}

LinkSet LinkSet::without(const Link& link) const {
  LinkSet r;
  r.links_.reserve(links_.size());
  for (const auto& l : links_)
    if (!(l == link)) r.links_.push_back(l);
  return r;
}

LinkSet LinkSet::disjoint_union(const LinkSet& other) const {
  auto v = links_;
  v.insert(v.end(), other.links_.begin(), other.links_.end());
  return LinkSet(std::move(v));
}

LinkSet LinkSet::relabeled(const std::vector<std::pair<Label, Label>>& mapping) const {
  auto image = [&](const Label& l) {
    for (const auto& [from, to] : mapping)
      if (from == l) return to;
    return l;
  };
  std::vector<Link> v;
  v.reserve(links_.size());
  for (const auto& l : links_) v.emplace_back(image(l.first()), image(l.second()));
  return LinkSet(std::move(v));
}

std::string LinkSet::to_string() const {
  if (links_.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (i) s += ",";
    s += links_[i].to_string();
  }
  return s + "}";
}

LinkSet parse_link_set(std::string_view text) {
  std::vector<Link> links;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    if (c != '(') throw DomainError("expected '(' in link list '" + std::string(text) + "'");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw DomainError("unbalanced '(' in '" + std::string(text) + "'");
    auto inner = text.substr(pos + 1, close - pos - 1);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw DomainError("link needs two indices: '" + std::string(inner) + "'");
    links.emplace_back(parse_label(inner.substr(0, comma)), parse_label(inner.substr(comma + 1)));
    pos = close + 1;
  }
  return LinkSet(std::move(links));
}

std::vector<Label> IndexSet::all() const {
  std::vector<Label> v = starred;
  v.insert(v.end(), substarred.begin(), substarred.end());
  return v;
}

void IndexSet::validate() const {
  auto v = all();
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw DomainError("index set labels must be pairwise distinct");
}

namespace {

void matchings_rec(std::vector<Label>& remaining, std::vector<Link>& current,
                   std::vector<LinkSet>& out) {
  if (remaining.empty()) {
    out.emplace_back(current);
    return;
  }
  Label head = remaining.front();
  for (std::size_t i = 1; i < remaining.size(); ++i) {
    Label partner = remaining[i];
    std::vector<Label> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t j = 1; j < remaining.size(); ++j)
      if (j != i) rest.push_back(remaining[j]);
    current.emplace_back(head, partner);
    matchings_rec(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<LinkSet> perfect_matchings(const std::vector<Label>& labels) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("perfect_matchings: repeated label");
  if (sorted.size() % 2 != 0) return {};
  std::vector<LinkSet> out;
  std::vector<Link> current;
  matchings_rec(sorted, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace siegel
