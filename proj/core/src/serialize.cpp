#include "siegel/serialize.hpp"

#include "siegel/error.hpp"

namespace siegel {

using nlohmann::json;

namespace {

json pair_list(const LinkSet& links) {
  json out = json::array();
  for (const auto& l : links) out.push_back({l.first().to_string(), l.second().to_string()});
  return out;
}

LinkSet pairs_from_json(const json& j) {
  std::vector<Link> links;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw DomainError("a link must be a pair of labels");
    links.emplace_back(parse_label(pair[0].get<std::string>()), parse_label(pair[1].get<std::string>()));
  }
  return LinkSet(std::move(links));
}

}  // namespace

json to_json(const CoeffPoly& c) {
  json out = json::array();
  for (const auto& [e, v] : c.terms())
    out.push_back({{"k", e.first}, {"s", e.second}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}});
  return out;
}

CoeffPoly coeff_poly_from_json(const json& j) {
  CoeffPoly out;
  for (const auto& t : j)
    out += CoeffPoly::monomial(t.at("k").get<int>(), t.at("s").get<int>(),
                               parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>()));
  return out;
}

json to_json(const LinkSet& links) { return pair_list(links); }
LinkSet link_set_from_json(const json& j) { return pairs_from_json(j); }

json to_json(const Expansion& e) {
  json labels = json::array();
  for (const auto& l : e.underlying) labels.push_back(l.to_string());
  json terms = json::array();
  for (const auto& [key, c] : e.terms)
    terms.push_back({{"A", pair_list(key.first)}, {"E", pair_list(key.second)}, {"coeff", to_json(c)},
                     {"text", c.to_string()}});
  return {{"underlying", labels},
          {"basis", e.basis == Expansion::Basis::DeltaMinusE ? "DeltaMinusE" : "Delta"},
          {"terms", terms}};
}

Expansion expansion_from_json(const json& j) {
  Expansion e;
  for (const auto& l : j.at("underlying")) e.underlying.push_back(parse_label(l.get<std::string>()));
  if (j.value("basis", "DeltaMinusE") == "Delta") e.basis = Expansion::Basis::Delta;
  for (const auto& t : j.at("terms"))
    e.terms[{pairs_from_json(t.at("A")), pairs_from_json(t.at("E"))}] = coeff_poly_from_json(t.at("coeff"));
  return e;
}

json to_json(const HarmonicPolynomial& p) {
  json terms = json::array();
  for (const auto& [links, c] : p.terms()) terms.push_back({{"links", pair_list(links)}, {"coeff", to_string(c)}});
  const auto& s = p.shape();
  return {{"p", s.p}, {"q", s.q}, {"d", s.d}, {"l", s.l}, {"terms", terms}};
}

HarmonicPolynomial harmonic_from_json(const json& j) {
  SplitShape shape{j.at("p").get<int>(), j.at("q").get<int>(), j.at("d").get<int>(), j.at("l").get<int>()};
  shape.validate();
  HarmonicPolynomial p(shape);
  for (const auto& t : j.at("terms"))
    p.add_term(pairs_from_json(t.at("links")), parse_rational(t.at("coeff").get<std::string>()));
  p.validate();
  return p;
}

json to_json(const QPolynomial& q) {
  json labels = json::array();
  for (const auto& l : q.underlying) labels.push_back(l.to_string());
  json terms = json::array();
  for (const auto& [links, c] : q.terms)
    terms.push_back({{"links", pair_list(links)}, {"coeff", to_json(c)}, {"text", c.to_string()}});
  return {{"underlying", labels}, {"terms", terms}};
}

json to_json(const FourierTable2& t) {
  json entries = json::array();
  for (const auto& [f, v] : t.entries) entries.push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}, {"value", to_string(v)}});
  return {{"weight", t.weight}, {"maxDet", t.max_det}, {"entries", entries}};
}

FourierTable2 fourier_table_from_json(const json& j) {
  FourierTable2 t;
  t.weight = j.at("weight").get<int>();
  t.max_det = j.at("maxDet").get<long>();
  for (const auto& e : j.at("entries"))
    t.entries[{e.at("a").get<long>(), e.at("b").get<long>(), e.at("c").get<long>()}] =
        parse_rational(e.at("value").get<std::string>());
  return t;
}

json to_json(const QExpansion1& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_string(c));
  return {{"weight", f.weight}, {"truncation", f.truncation()}, {"coeffs", coeffs}};
}

QExpansion1 qexpansion_from_json(const json& j) {
  QExpansion1 f;
  f.weight = j.at("weight").get<int>();
  for (const auto& c : j.at("coeffs")) f.coeffs.push_back(parse_rational(c.get<std::string>()));
  return f;
}

}  // namespace siegel
