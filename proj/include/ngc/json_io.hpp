#pragma once

#include <nlohmann/json.hpp>

#include "ngc/multivector.hpp"

namespace ngc {

using nlohmann::json;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// {"xi_indices":[...], "terms":[{"monomial":["rho_xy",...], "coeff":"p/q"}]} per component.
json multivector_to_json(const Multivector& v);
Multivector multivector_from_json(const json& j);

JetVar jetvar_from_string(const std::string& s, int dim);

}  // namespace ngc
