#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcap/registry.hpp"

namespace qcap::verify {

struct Task {
  const reg::IdentityCase* c = nullptr;
  reg::Params params;
};

/// Every (case, params) instance of the selected cases, sorted by (id, params).
std::vector<Task> expand(const std::vector<const reg::IdentityCase*>& cases, const reg::GridConfig& grid);

enum class Verdict { Pass, Fail, Error };
const char* verdict_name(Verdict v);

struct SideMismatch {
  std::string side;
  long exponent = 0;
  Int lhs;
  Int rhs;
};

struct Report {
  std::string id;
  reg::Params params;
  reg::Mode mode = reg::Mode::ExactPolynomial;
  Verdict verdict = Verdict::Error;
  /// Agreement order for truncated comparisons.
  std::optional<long> upto;
  std::optional<SideMismatch> first_mismatch;
  /// Highest exponent of the first side and of the second side; empty for zero.
  std::optional<long> lhs_degree;
  std::optional<long> rhs_degree;
  std::string error;
  double millis = 0;
};

/// Evaluates every side of the task and compares them against the first.
Report run_task(const Task& task);

/// Runs tasks on `jobs` OpenMP threads. Results keep the task order; when
/// `cancel` becomes true, tasks not yet started are dropped.
std::vector<Report> run_parallel(const std::vector<Task>& tasks, int jobs,
                                 const std::atomic<bool>* cancel = nullptr);
/// Single-threaded reference runner.
std::vector<Report> run_serial(const std::vector<Task>& tasks, const std::atomic<bool>* cancel = nullptr);

/// {id, params, mode, verdict, first_mismatch?, lhs_degree, rhs_degree, millis}.
/// millis is left out when with_timing is false so reports compare byte for byte.
nlohmann::json to_json(const Report& r, bool with_timing = true);
std::string to_text(const Report& r);

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  bool all_pass() const { return total > 0 && passed == total; }
};
Summary summarize(const std::vector<Report>& reports);
nlohmann::json to_json(const Summary& s);

}  // namespace qcap::verify
