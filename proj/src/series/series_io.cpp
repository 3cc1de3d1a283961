#include "logcoef/series_io.hpp"

#include "logcoef/error.hpp"

namespace logcoef {

nlohmann::json complex_to_json(const Complex& z) { return nlohmann::json::array({z.re.str(40), z.im.str(40)}); }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw DomainError("complex value must be a [re, im] pair of decimal strings");
  return {Real::parse(j[0].get<std::string>()), Real::parse(j[1].get<std::string>())};
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : s.coeffs()) out.push_back(complex_to_json(c));
  return out;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("series must be a non-empty JSON array");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) coeffs.push_back(complex_from_json(e));
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace logcoef
