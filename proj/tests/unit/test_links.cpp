#include "siegel/error.hpp"
#include "siegel/links.hpp"

#include <gtest/gtest.h>

using namespace siegel;

TEST(Labels, ParseAndPrint) {
  EXPECT_EQ(parse_label("3"), Label::plain(3));
  EXPECT_EQ(parse_label("2*"), Label::star(2));
  EXPECT_EQ(parse_label("5_"), Label::sub(5));
  EXPECT_EQ(Label::star(4).to_string(), "4*");
  EXPECT_THROW(parse_label("x"), DomainError);
  EXPECT_THROW(parse_label("0"), DomainError);
}

TEST(Links, RejectRepeatedIndex) {
  EXPECT_THROW(Link(Label::plain(1), Label::plain(1)), DomainError);
  EXPECT_THROW(parse_link_set("(1,2),(2,3)"), DomainError);
}

TEST(Links, CanonicalOrder) {
  Link a(Label::plain(2), Label::plain(1));
  EXPECT_EQ(a.first(), Label::plain(1));
  EXPECT_EQ(parse_link_set("(3,4),(2,1)"), parse_link_set("(1,2),(3,4)"));
}

TEST(Links, BlockClasses) {
  EXPECT_TRUE(Link(Label::star(1), Label::sub(1)).is_mixed());
  EXPECT_TRUE(Link(Label::star(1), Label::star(2)).is_star_star());
  EXPECT_TRUE(Link(Label::sub(1), Label::sub(2)).is_sub_sub());
}

TEST(Links, ParseEmptyAndSplit) {
  EXPECT_TRUE(parse_link_set("").empty());
  auto l = parse_link_set("(1*,1_)(2*,2_)");
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.labels().size(), 4u);
}

TEST(PerfectMatchings, DoubleFactorialCounts) {
  std::vector<Label> labels;
  const std::size_t expected[] = {1, 1, 3, 15, 105};
  for (int n = 0; n <= 8; n += 2) {
    labels.clear();
    for (int i = 1; i <= n; ++i) labels.push_back(Label::plain(i));
    auto m = perfect_matchings(labels);
    EXPECT_EQ(m.size(), expected[n / 2]) << n;
    for (const auto& ls : m) EXPECT_EQ(ls.labels(), labels);
  }
}

TEST(IndexSets, Distinctness) {
  IndexSet ok{{Label::star(1)}, {Label::sub(1)}};
  EXPECT_NO_THROW(ok.validate());
  IndexSet bad{{Label::star(1)}, {Label::star(1)}};
  EXPECT_THROW(bad.validate(), DomainError);
}
