#pragma once

#include "siegel/coeff_poly.hpp"
#include "siegel/eisenstein2.hpp"
#include "siegel/harmonic.hpp"
#include "siegel/link_calculus.hpp"
#include "siegel/qexpansion.hpp"

#include <json.hpp>

namespace siegel {

// Exact values are written as decimal strings ("num/den" or "num").
nlohmann::json to_json(const CoeffPoly& c);
CoeffPoly coeff_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinkSet& links);
LinkSet link_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Expansion& e);
Expansion expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HarmonicPolynomial& p);
HarmonicPolynomial harmonic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QPolynomial& q);

nlohmann::json to_json(const FourierTable2& t);
FourierTable2 fourier_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QExpansion1& f);
QExpansion1 qexpansion_from_json(const nlohmann::json& j);

}  // namespace siegel
