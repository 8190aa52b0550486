#pragma once

#include <json.hpp>

#include "flatperm/genfun.hpp"
#include "flatperm/permcore.hpp"
#include "flatperm/poly.hpp"
#include "flatperm/xvpoly.hpp"

namespace flatperm {

// Canonical text forms: every integer is a decimal string, coefficients
// are listed in ascending powers, and XVPoly is a rectangular row-major
// matrix indexed by (power of x, power of v).
//
//   {"var":"q","coeffs":["4","2"]}                  4 + 2q
//   {"vars":["x","v"],"coeffs":[["2","3"],["0","-8"],["0","4"]]}

nlohmann::json poly_to_json(const Poly& p, char var);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json xvpoly_to_json(const XVPoly& p);
XVPoly xvpoly_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const OccurrenceTable& t);
nlohmann::json ctable_to_json(const genfun::CTable& t);
nlohmann::json rational_gf_to_json(const genfun::RationalGF& gf);

}  // namespace flatperm
