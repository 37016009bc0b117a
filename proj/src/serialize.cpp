#include "qcap/serialize.hpp"

namespace qcap {

nlohmann::json int_to_json(const Int& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

nlohmann::json to_json(const QSeries& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Int& c : a.coeffs()) coeffs.push_back(int_to_json(c));
  nlohmann::json j;
  j["offset"] = a.offset();
  j["coeffs"] = std::move(coeffs);
  j["trunc"] = a.truncation() ? nlohmann::json(*a.truncation()) : nlohmann::json(nullptr);
  return j;
}

QSeries series_from_json(const nlohmann::json& j) {
  try {
    const long offset = j.at("offset").get<long>();
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_string()) {
        Int v;
        if (v.set_str(c.get<std::string>(), 10) != 0) throw ConfigError("bad coefficient " + c.dump());
        coeffs.push_back(v);
      } else {
        coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
      }
    }
    std::optional<long> trunc;
    if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = j.at("trunc").get<long>();
    return QSeries::from_coeffs(offset, std::move(coeffs), trunc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace qcap
