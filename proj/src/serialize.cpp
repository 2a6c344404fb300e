#include "darboux/serialize.hpp"

#include <stdexcept>

namespace darboux {

using nlohmann::json;

json to_json_value(const BigRat& r) { return to_string(r); }

json to_json_value(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json_value(c));
  return out;
}

json to_json_value(const RatFun& f) {
  return json{{"num", to_json_value(f.num())}, {"den", to_json_value(f.den())}};
}

json to_json_value(const LadderState& s) {
  return json{{"j", s.j},
              {"beta", to_json_value(s.beta)},
              {"f", to_json_value(s.f)},
              {"branch", std::string(to_string(s.branch))}};
}

json to_json_value(const ContinuedFraction& cf) {
  json terms = json::array();
  for (const auto& level : cf.terms) {
    terms.push_back({{"partial_numerator", to_json_value(level.partial_numerator)},
                     {"partial_denominator", to_json_value(level.partial_denominator)}});
  }
  return json{{"head", to_json_value(cf.head)},
              {"terms", std::move(terms)},
              {"terminal", to_json_value(cf.terminal())}};
}

BigRat rat_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of rationals");
  std::vector<BigRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rat_from_json(c));
  return Poly(std::move(coeffs));
}

RatFun ratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("rational function must be {\"num\": [...], \"den\": [...]}");
  }
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace darboux
