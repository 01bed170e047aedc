#include "jfunc/serialize.hpp"

#include "jfunc/errors.hpp"

namespace jfunc {

namespace {

nlohmann::json coeff_array(const std::vector<Integer>& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

std::vector<Integer> coeffs_from(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array of decimal strings");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw InvalidArgument("polynomial coefficient must be a decimal string");
    Integer c;
    if (c.set_str(item.get<std::string>(), 10) != 0) {
      throw InvalidArgument("bad decimal coefficient '" + item.get<std::string>() + "'");
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const IntPoly& p) { return coeff_array(p.coeffs()); }

nlohmann::json to_json(const LaurentPoly& p) {
  return nlohmann::json{{"offset", p.offset()}, {"coeffs", coeff_array(p.coeffs())}};
}

nlohmann::json to_json(const TruncatedSeries& s) { return coeff_array(s.coeffs()); }

nlohmann::json to_json(const LatticeVector& v) { return nlohmann::json(v.coeffs()); }

IntPoly int_poly_from_json(const nlohmann::json& j) { return IntPoly(coeffs_from(j)); }

LaurentPoly laurent_poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs") || !j["offset"].is_number_integer()) {
    throw InvalidArgument("Laurent polynomial JSON needs integer 'offset' and 'coeffs'");
  }
  return LaurentPoly(j["offset"].get<int>(), coeffs_from(j["coeffs"]));
}

LatticeVector lattice_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("lattice vector JSON must be an integer array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("lattice vector JSON must be an integer array");
    v.push_back(x.get<int>());
  }
  return LatticeVector(std::move(v));
}

}  // namespace jfunc
