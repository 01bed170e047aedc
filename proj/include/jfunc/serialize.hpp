#pragma once

#include <json.hpp>

#include "jfunc/poly.hpp"
#include "jfunc/root_system.hpp"
#include "jfunc/series.hpp"

namespace jfunc {

// Polynomials serialize as arrays of decimal strings, lowest degree first.
// Laurent polynomials add an integer "offset".

nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const LatticeVector& v);

IntPoly int_poly_from_json(const nlohmann::json& j);
LaurentPoly laurent_poly_from_json(const nlohmann::json& j);
LatticeVector lattice_vector_from_json(const nlohmann::json& j);

}  // namespace jfunc
