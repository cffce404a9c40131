#include "siegel/eisenstein2.hpp"
#include "siegel/harmonic.hpp"
#include "siegel/link_calculus.hpp"
#include "siegel/links.hpp"
#include "siegel/modular.hpp"
#include "siegel/serialize.hpp"

#include <gtest/gtest.h>

using namespace siegel;

TEST(Serialize, CoeffPolyAndLinks) {
  const auto e = expand_operator(parse_link_set("(1,2),(3,4)"));
  for (const auto& [key, c] : e.terms) {
    EXPECT_EQ(coeff_poly_from_json(to_json(c)), c);
    EXPECT_EQ(link_set_from_json(to_json(key.first)), key.first);
    EXPECT_EQ(link_set_from_json(to_json(key.second)), key.second);
  }
}

TEST(Serialize, ExpansionRoundTrip) {
  for (const char* text : {"(1,2)", "(1,2),(3,4)", "(1,3),(2,4)"}) {
    const auto e = expand_operator(parse_link_set(text));
    const auto j = to_json(e);
    EXPECT_EQ(expansion_from_json(j), e) << text;
    EXPECT_EQ(expansion_from_json(nlohmann::json::parse(j.dump())), e) << text;
  }
  const auto raw = expand_operator_delta_basis(parse_link_set("(1,2),(3,4)"));
  EXPECT_EQ(expansion_from_json(to_json(raw)), raw);
}

TEST(Serialize, HarmonicRoundTrip) {
  const auto p = symmetric_degree_two({2, 2, 8, 2});
  EXPECT_EQ(harmonic_from_json(to_json(p)), p);
  const auto q = antisymmetric_degree_two({2, 2, 8, 2});
  EXPECT_EQ(harmonic_from_json(nlohmann::json::parse(to_json(q).dump())), q);
}

TEST(Serialize, FourierTableAndQExpansion) {
  const auto t = siegel_eisenstein2(4, 12);
  EXPECT_EQ(fourier_table_from_json(nlohmann::json::parse(to_json(t).dump())), t);
  const auto f = cusp_eigenform(12, 30).form;
  EXPECT_EQ(qexpansion_from_json(to_json(f)), f);
}

TEST(Serialize, RejectsMalformed) {
  EXPECT_ANY_THROW(coeff_poly_from_json(nlohmann::json::parse(R"([{"k":"x"}])")));
  EXPECT_ANY_THROW(link_set_from_json(nlohmann::json::parse(R"([["1"]])")));
}
