#pragma once

#include <json.hpp>

#include "sif/filtration.hpp"
#include "sif/qcharacter.hpp"
#include "sif/state.hpp"
#include "sif/tableaux.hpp"

namespace sif {

using nlohmann::json;

// All serializers are deterministic (map iteration order) and use exact
// "p/q" strings for rationals; cyclotomic scalars are coordinate vectors in
// the field Q(zeta_m) with m = rs.cyc_order(). Parsers throw
// std::invalid_argument on malformed input.

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

json cyc_json(const RootSystem& rs, const Cyc& c);
Cyc cyc_from_json(const RootSystem& rs, const json& j);

json weight_json(const Weight& w);
Weight weight_from_json(const RootSystem& rs, const json& j);

json state_json(const RootSystem& rs, const State& s);
State state_from_json(const RootSystem& rs, const json& j);

json qcharacter_json(const QCharacter& ch);

json ring_element_json(const RootSystem& rs, const RingElement& el);

json relation_series_json(const RelationSeries& ser);

}  // namespace sif
