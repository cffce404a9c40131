#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace siegel {

// Index label. Plain labels ("3") are used by the bare link calculus; the
// split index set of the pluri-harmonic machinery uses starred ("3*") and
// substarred ("3_") labels.
struct Label {
  enum class Kind : std::uint8_t { Plain = 0, Star = 1, Sub = 2 };
  Kind kind = Kind::Plain;
  int index = 0;

  static Label plain(int i) { return {Kind::Plain, i}; }
  static Label star(int i) { return {Kind::Star, i}; }
  static Label sub(int i) { return {Kind::Sub, i}; }

  auto operator<=>(const Label&) const = default;
  std::string to_string() const;
};

Label parse_label(std::string_view text);

// Unordered pair of distinct labels, stored with first < second.
class Link {
 public:
  Link(Label a, Label b);
  const Label& first() const { return first_; }
  const Label& second() const { return second_; }
  bool contains(const Label& l) const { return first_ == l || second_ == l; }
  const Label& partner(const Label& l) const { return first_ == l ? second_ : first_; }

  // Block class of the link in the split index set.
  bool is_mixed() const;          // one starred, one substarred
  bool is_star_star() const;
  bool is_sub_sub() const;

  auto operator<=>(const Link&) const = default;
  std::string to_string() const;

 private:
  Label first_;
  Label second_;
};

// A set of links whose labels are pairwise distinct. Kept sorted.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(std::vector<Link> links);

  const std::vector<Link>& links() const { return links_; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }
  auto begin() const { return links_.begin(); }
  auto end() const { return links_.end(); }

  // Sorted list of all labels used.
  std::vector<Label> labels() const;
  bool contains(const Link& link) const;
  bool uses(const Label& label) const;
  // Link containing the label; undefined if !uses(label).
  const Link& link_of(const Label& label) const;

  LinkSet with(const Link& link) const;
  LinkSet without(const Link& link) const;
  LinkSet disjoint_union(const LinkSet& other) const;
  LinkSet relabeled(const std::vector<std::pair<Label, Label>>& mapping) const;

  auto operator<=>(const LinkSet&) const = default;
  std::string to_string() const;

 private:
  std::vector<Link> links_;
};

// Parses "(1,2),(3,4)" or "(1*,1_)(2*,2_)"; empty string gives the empty set.
LinkSet parse_link_set(std::string_view text);

// Split index set I = I* u I_*; plain labels go in `starred` by convention
// when no split is intended.
struct IndexSet {
  std::vector<Label> starred;
  std::vector<Label> substarred;

  std::vector<Label> all() const;
  void validate() const;
};

// Every perfect matching of the given labels, in a deterministic order.
std::vector<LinkSet> perfect_matchings(const std::vector<Label>& labels);

}  // namespace siegel
