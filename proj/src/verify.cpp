#include "qcap/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "qcap/serialize.hpp"

namespace qcap::verify {

std::vector<Task> expand(const std::vector<const reg::IdentityCase*>& cases, const reg::GridConfig& grid) {
  std::vector<Task> tasks;
  for (const auto* c : cases)
    for (auto& p : c->grid(grid)) tasks.push_back(Task{c, std::move(p)});
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.c->id != b.c->id) return a.c->id < b.c->id;
    return a.params < b.params;
  });
  return tasks;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Error:
      break;
  }
  return "error";
}

namespace {

std::optional<long> degree(const QSeries& s) {
  if (s.is_zero()) return std::nullopt;
  return s.max_exponent();
}

}  // namespace

Report run_task(const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.id = task.c->id;
  r.params = task.params;
  r.mode = task.c->mode;
  try {
    task.c->validate(task.params);
    std::vector<QSeries> values;
    for (const auto& s : task.c->sides) values.push_back(s.eval(task.params));
    if (r.mode == reg::Mode::ExactPolynomial)
      for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_exact()) throw Error("side " + task.c->sides[i].name + " of an exact case is truncated");
    r.lhs_degree = degree(values[0]);
    if (values.size() > 1) r.rhs_degree = degree(values[1]);
    r.verdict = Verdict::Pass;
    for (std::size_t i = 1; i < values.size(); ++i) {
      const Comparison cmp = compare(values[0], values[i]);
      if (cmp.upto) r.upto = r.upto ? std::min(*r.upto, *cmp.upto) : *cmp.upto;
      if (!cmp.equal) {
        r.verdict = Verdict::Fail;
        const Mismatch& m = *cmp.mismatch;
        r.first_mismatch = SideMismatch{task.c->sides[i].name, m.exponent, m.lhs, m.rhs};
        break;
      }
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.error = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

bool cancelled(const std::atomic<bool>* cancel) { return cancel && cancel->load(std::memory_order_relaxed); }

std::vector<Report> collect(std::vector<std::optional<Report>>& slots) {
  std::vector<Report> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<Report> run_parallel(const std::vector<Task>& tasks, int jobs, const std::atomic<bool>* cancel) {
  std::vector<std::optional<Report>> slots(tasks.size());
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs))
  for (long i = 0; i < n; ++i) {
    if (cancelled(cancel)) continue;
    slots[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)]);
  }
  return collect(slots);
}

std::vector<Report> run_serial(const std::vector<Task>& tasks, const std::atomic<bool>* cancel) {
  std::vector<Report> out;
  for (const auto& t : tasks) {
    if (cancelled(cancel)) break;
    out.push_back(run_task(t));
  }
  return out;
}

nlohmann::json to_json(const Report& r, bool with_timing) {
  nlohmann::json j;
  j["id"] = r.id;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params.values()) params[k] = v;
  j["params"] = std::move(params);
  j["mode"] = r.upto ? "truncated-agreement up to " + std::to_string(*r.upto) : reg::mode_name(r.mode);
  j["verdict"] = verdict_name(r.verdict);
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"side", r.first_mismatch->side},
                           {"exponent", r.first_mismatch->exponent},
                           {"lhs", int_to_json(r.first_mismatch->lhs)},
                           {"rhs", int_to_json(r.first_mismatch->rhs)}};
  }
  j["lhs_degree"] = r.lhs_degree ? nlohmann::json(*r.lhs_degree) : nlohmann::json(nullptr);
  j["rhs_degree"] = r.rhs_degree ? nlohmann::json(*r.rhs_degree) : nlohmann::json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  if (with_timing) j["millis"] = r.millis;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << verdict_name(r.verdict) << ' ' << r.id << " [" << r.params.to_string() << ']';
  if (r.upto) os << " up to q^" << *r.upto;
  if (r.first_mismatch)
    os << " mismatch on side " << r.first_mismatch->side << " at q^" << r.first_mismatch->exponent << ": "
       << r.first_mismatch->lhs.get_str() << " vs " << r.first_mismatch->rhs.get_str();
  if (!r.error.empty()) os << ": " << r.error;
  return os.str();
}

Summary summarize(const std::vector<Report>& reports) {
  Summary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.verdict == Verdict::Pass) ++s.passed;
    if (r.verdict == Verdict::Fail) ++s.failed;
    if (r.verdict == Verdict::Error) ++s.errors;
  }
  return s;
}

nlohmann::json to_json(const Summary& s) {
  return {{"summary", true}, {"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"errors", s.errors}};
}

}  // namespace qcap::verify
