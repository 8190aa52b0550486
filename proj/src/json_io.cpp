#include "flatperm/json_io.hpp"

#include <stdexcept>

namespace flatperm {

using nlohmann::json;

namespace {

Integer parse_integer(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string coefficient");
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument("bad integer literal '" + j.get<std::string>() + "'");
  }
  return z;
}

}  // namespace

json poly_to_json(const Poly& p, char var) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"var", std::string(1, var)}, {"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_integer(c));
  return Poly(std::move(coeffs));
}

json xvpoly_to_json(const XVPoly& p) {
  json rows = json::array();
  for (const auto& row : p.to_matrix()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    rows.push_back(std::move(r));
  }
  return json{{"vars", json::array({"x", "v"})}, {"coeffs", std::move(rows)}};
}

XVPoly xvpoly_from_json(const json& j) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j.at("coeffs")) {
    std::vector<Integer> r;
    for (const auto& c : row) r.push_back(parse_integer(c));
    rows.push_back(std::move(r));
  }
  return XVPoly::from_matrix(rows);
}

json table_to_json(const OccurrenceTable& t) {
  json rows = json::array();
  for (const auto& [r, c] : t.counts) rows.push_back(json::array({r, c.get_str()}));
  return json{{"n", t.n}, {"prefix", t.prefix}, {"rows", std::move(rows)}};
}

json ctable_to_json(const genfun::CTable& t) {
  json cs = json::array();
  for (const auto& c : t.c) cs.push_back(poly_to_json(c, 'x'));
  return json{{"r", t.r}, {"c", std::move(cs)}};
}

json rational_gf_to_json(const genfun::RationalGF& gf) {
  return json{{"r", gf.r},
              {"numerator", xvpoly_to_json(gf.numerator)},
              {"denominator", json{{"s", "1-x"}, {"s_power", gf.s_power}, {"t", "1-2x"}, {"t_power", gf.t_power}}}};
}

}  // namespace flatperm
