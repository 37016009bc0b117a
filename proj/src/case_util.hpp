#pragma once

#include <string>
#include <utility>

#include "qcap/registry.hpp"

namespace qcap::reg::detail {

using Eval = std::function<QSeries(const Params&)>;

inline Side side(std::string name, Eval eval) { return Side{std::move(name), std::move(eval)}; }

inline void non_negative(const Params& p, std::initializer_list<const char*> names) {
  for (const char* n : names) require(p.get(n) >= 0, std::string(n) + " must be non-negative");
}

/// Exact case in the single parameter `name`, gridded over 0..limit(cfg).
inline IdentityCase single_param_case(std::string id, std::string summary, const std::string& name,
                                      std::vector<Side> sides, long (*limit)(const GridConfig&)) {
  IdentityCase c;
  c.id = std::move(id);
  c.summary = std::move(summary);
  c.params = {name};
  c.sides = std::move(sides);
  c.validate = [name](const Params& p) { require(p.get(name) >= 0, name + " must be non-negative"); };
  c.grid = [name, limit](const GridConfig& g) { return range_grid(name, 0, limit(g)); };
  return c;
}

inline long L_limit(const GridConfig& g) { return g.L_max; }
inline long M_limit(const GridConfig& g) { return g.M_max; }
inline long N_limit(const GridConfig& g) { return g.N; }

/// Truncated case whose only parameter is the order N.
inline IdentityCase series_case(std::string id, std::string summary, std::vector<Side> sides) {
  IdentityCase c = single_param_case(std::move(id), std::move(summary), "N", std::move(sides), N_limit);
  c.mode = Mode::TruncatedSeries;
  c.grid = [](const GridConfig& g) { return std::vector<Params>{Params{{"N", g.N}}}; };
  return c;
}

}  // namespace qcap::reg::detail
