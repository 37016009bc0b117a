#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap::reg {

enum class Mode { ExactPolynomial, TruncatedSeries };

const char* mode_name(Mode m);

/// Named integer parameters in schema order.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, long>> values) : values_(values) {}

  long get(std::string_view name) const;
  std::optional<long> find(std::string_view name) const;
  void set(const std::string& name, long value);
  const std::vector<std::pair<std::string, long>>& values() const { return values_; }

  /// "L=3,M=2"
  std::string to_string() const;

  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params& a, const Params& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<std::pair<std::string, long>> values_;
};

/// Parameter ranges used to expand every case into concrete instances.
struct GridConfig {
  long L_max = 8;
  long M_max = 8;
  long f_max = 3;
  long nu_max = 2;
  long k_max = 3;
  long N = 30;
  /// Restrict twisted families to one s instead of 0..f.
  std::optional<long> s;
};

struct Side {
  std::string name;
  std::function<QSeries(const Params&)> eval;
};

/// One registered identity. Every side is evaluated independently and all
/// sides must agree; the first side is reported as the left side.
struct IdentityCase {
  std::string id;
  std::string summary;
  std::vector<std::string> params;
  Mode mode = Mode::ExactPolynomial;
  std::vector<Side> sides;
  /// Throws ParamOutOfRange for parameters outside the case's domain.
  std::function<void(const Params&)> validate;
  std::function<std::vector<Params>(const GridConfig&)> grid;

  const Side* side(std::string_view name) const;
};

/// All cases, sorted by id. Built once; immutable afterwards.
const std::vector<IdentityCase>& registry();
const IdentityCase* find_case(std::string_view id);
std::vector<std::string> case_ids();

// Grid helpers shared by the case tables.
std::vector<Params> range_grid(const std::string& name, long lo, long hi);
/// Cartesian product, later parameters varying fastest.
std::vector<Params> product_grid(const std::vector<Params>& a, const std::vector<Params>& b);
void require(bool ok, const std::string& message);

// Case tables, one per source file.
void add_capparelli_cases(std::vector<IdentityCase>& out);
void add_hierarchy_cases(std::vector<IdentityCase>& out);
void add_limit_cases(std::vector<IdentityCase>& out);
void add_classical_cases(std::vector<IdentityCase>& out);

}  // namespace qcap::reg
