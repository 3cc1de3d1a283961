#pragma once

#include "logcoef/series.hpp"

#include "json.hpp"

namespace logcoef {

/// JSON array of [re, im] decimal strings with 40 significant digits.
nlohmann::json series_to_json(const TruncatedSeries& s);
/// Inverse of series_to_json at the working precision.
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace logcoef
