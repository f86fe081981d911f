#pragma once

// JSON renderings of results. Rationals are strings; index sets are 1-based.
// With `approx` set, a sibling "approximate" object carries doubles.

#include <json.hpp>

#include "rank1/binsearch.hpp"
#include "rank1/enumerate.hpp"
#include "rank1/homeo.hpp"
#include "rank1/oracle.hpp"

namespace rank1::report {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const RatMatrix& m);
json approx(const Vec& v);

json game_json(const Game& g);
json equilibrium_json(const EquilibriumRecord& r, bool with_approx);
json subset_json(const NashSubset& s, bool with_approx);
json check_json(const NashCheck& c, const Rational& qp, bool with_approx);
json equilibrium_point_json(const EquilibriumPoint& e);

Rational rational_from_json(const json& j);
Vec vec_from_json(const json& j);

}  // namespace rank1::report
