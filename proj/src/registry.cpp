#include "qcap/registry.hpp"

#include <algorithm>
#include <sstream>

namespace qcap::reg {

const char* mode_name(Mode m) { return m == Mode::ExactPolynomial ? "exact" : "truncated"; }

long Params::get(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ConfigError("missing parameter " + std::string(name));
}

std::optional<long> Params::find(std::string_view name) const {
  for (const auto& [k, v] : values_)
    if (k == name) return v;
  return std::nullopt;
}

void Params::set(const std::string& name, long value) {
  for (auto& [k, v] : values_)
    if (k == name) {
      v = value;
      return;
    }
  values_.emplace_back(name, value);
}

std::string Params::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i)
    os << (i ? "," : "") << values_[i].first << '=' << values_[i].second;
  return os.str();
}

const Side* IdentityCase::side(std::string_view name) const {
  for (const auto& s : sides)
    if (s.name == name) return &s;
  return nullptr;
}

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> cases = [] {
    std::vector<IdentityCase> v;
    add_capparelli_cases(v);
    add_hierarchy_cases(v);
    add_limit_cases(v);
    add_classical_cases(v);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].id == v[i - 1].id) throw Error("duplicate case id " + v[i].id);
    return v;
  }();
  return cases;
}

const IdentityCase* find_case(std::string_view id) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), id,
                             [](const IdentityCase& c, std::string_view k) { return c.id < k; });
  return it != r.end() && it->id == id ? &*it : nullptr;
}

std::vector<std::string> case_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

std::vector<Params> range_grid(const std::string& name, long lo, long hi) {
  std::vector<Params> out;
  for (long v = lo; v <= hi; ++v) out.push_back(Params{{name, v}});
  return out;
}

std::vector<Params> product_grid(const std::vector<Params>& a, const std::vector<Params>& b) {
  std::vector<Params> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Params p = x;
      for (const auto& [k, v] : y.values()) p.set(k, v);
      out.push_back(std::move(p));
    }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParamOutOfRange(message);
}

}  // namespace qcap::reg
