#pragma once

#include <json.hpp>

#include "darboux/bigrat.hpp"
#include "darboux/continued_fraction.hpp"
#include "darboux/poly.hpp"
#include "darboux/ratfun.hpp"
#include "darboux/riccati.hpp"

// JSON encoding: BigRat as "p/q" (or "p"), Poly as an ascending array of
// BigRat strings, RatFun as {"num": [...], "den": [...]}.

namespace darboux {

nlohmann::json to_json_value(const BigRat& r);
nlohmann::json to_json_value(const Poly& p);
nlohmann::json to_json_value(const RatFun& f);
nlohmann::json to_json_value(const LadderState& s);
nlohmann::json to_json_value(const ContinuedFraction& cf);

/// Decoders throw std::invalid_argument on schema violations.
BigRat rat_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
RatFun ratfun_from_json(const nlohmann::json& j);

}  // namespace darboux
