#pragma once

#include "fairslice/discretize.hpp"
#include "fairslice/division.hpp"
#include "fairslice/nonconnected.hpp"
#include "fairslice/reductions.hpp"
#include "fairslice/valuation.hpp"

#include <json.hpp>

#include <string>

namespace fairslice {

using Json = nlohmann::json;

// Rationals are serialized as exact "p/q" strings; parsing also accepts
// plain integers and decimal strings. All player/item indices in JSON are
// 1-based. Parsers throw ValidationError on schema violations.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json instance_to_json(const CakeInstance& instance);
// Valuations are normalized at load unless "raw" is set.
CakeInstance instance_from_json(const Json& j);

Json discrete_to_json(const DiscreteInstance& D);
DiscreteInstance discrete_from_json(const Json& j);

Json division_to_json(const ConnectedDivision& d);
Json division_to_json(const DiscreteDivision& d);
// Accepts either {"cuts":..., "order":...} or {"pieces":...}.
bool is_discrete_division_json(const Json& j);
ConnectedDivision connected_division_from_json(const Json& j);
DiscreteDivision discrete_division_from_json(const Json& j);

Json report_to_json(const WelfareReport& report);

Json cutset_to_json(const CutSet& C);
CutSet cutset_from_json(const Json& j);

Json assignment_to_json(const FractionalAssignment& a, const Rational* t = nullptr);
FractionalAssignment assignment_from_json(const Json& j);

ThreeDMInstance threedm_from_json(const Json& j);
McspInstance mcsp_from_json(const Json& j);

// Adds "<key>_decimal" display fields next to every rational field named in
// the serializers above; `digits` decimal places, exact values untouched.
Json with_decimals(Json j, int digits);

}  // namespace fairslice
