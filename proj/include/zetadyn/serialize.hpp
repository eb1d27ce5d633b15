#pragma once

#include "zetadyn/actions.hpp"
#include "zetadyn/zeta.hpp"

#include "json.hpp"

#include <string>

namespace zetadyn {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"order": N, "coeffs": ["1", "1/2", ...]}
Json to_json(const PowerSeries& f);
PowerSeries power_series_from_json(const Json& j);

/// {"bound": N, "coeffs": [...]}, coeffs[0] = a(1).
Json to_json(const DirichletSeries& f);
DirichletSeries dirichlet_series_from_json(const Json& j);

/// e.g. {"group":"dinf","type":"dihedral","n":6,"k":0}; z_d handles carry
/// the HNF as a row-major array.
Json to_json(const SubgroupHandle& L);
SubgroupHandle handle_from_json(const Json& j);

/// {"method":..., "order":N, "coeffs":[...], "integer":bool, "radius_estimate":...}
Json to_json(const ZetaResult& r);

/// {"group":"dinf","matrices":{"a":[[-2,3],[1,-2]],"b":[[7,-12],[4,-7]]}}
ActionModel toral_from_json(const Json& j);
ActionModel load_toral_config(const std::string& path);

/// Quotes a field for CSV when it contains a comma or quote.
std::string csv_field(const std::string& s);

} // namespace zetadyn
