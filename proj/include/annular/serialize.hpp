#pragma once

#include <json.hpp>

#include "annular/bijections.hpp"
#include "annular/map_families.hpp"
#include "annular/monte_carlo.hpp"
#include "annular/polynomial.hpp"

namespace annular {

/// {"terms":[{"N":int,"c":int,"num":"...","den":"..."}]}, N desc then c desc.
nlohmann::json to_json(const MomentPolynomial& p);
MomentPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BijectionReport& r);
nlohmann::json to_json(const McEstimate& m);
/// Members in cycle notation.
nlohmann::json to_json(const FamilySet& s);

}  // namespace annular
