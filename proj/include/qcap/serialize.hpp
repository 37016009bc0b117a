#pragma once

#include "json.hpp"
#include "qcap/qseries.hpp"

namespace qcap {

/// {"offset": o, "coeffs": [...], "trunc": N|null}. Coefficients that fit in a
/// signed 64-bit integer are numbers, larger ones decimal strings.
nlohmann::json to_json(const QSeries& a);
/// Inverse of to_json. Throws ConfigError on malformed input.
QSeries series_from_json(const nlohmann::json& j);

/// Coefficient as a JSON number when it fits, otherwise a decimal string.
nlohmann::json int_to_json(const Int& c);

}  // namespace qcap
