#include <omp.h>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "qcap/hierarchy.hpp"
#include "qcap/partitions.hpp"
#include "qcap/recurrences.hpp"
#include "qcap/registry.hpp"
#include "qcap/serialize.hpp"
#include "qcap/verify.hpp"

namespace {

using namespace qcap;

constexpr int kConfigError = 2;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

int default_jobs() {
  if (const char* env = std::getenv("QCAP_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid QCAP_JOBS=" << env << '\n';
  }
  return omp_get_max_threads();
}

std::string valid_ids() {
  std::string s;
  for (const auto& id : reg::case_ids()) s += "  " + id + '\n';
  return s;
}

struct VerifyOptions {
  std::vector<std::string> cases;
  bool all = false;
  reg::GridConfig grid;
  long s = -1;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  bool serial = false;
  bool no_timing = false;
};

int cmd_verify(const VerifyOptions& o) {
  std::vector<const reg::IdentityCase*> selected;
  if (o.all == !o.cases.empty()) {
    std::cerr << "give either --all or at least one --case\n";
    return kConfigError;
  }
  if (o.all)
    for (const auto& c : reg::registry()) selected.push_back(&c);
  for (const auto& id : o.cases) {
    const auto* c = reg::find_case(id);
    if (!c) {
      std::cerr << "unknown case id '" << id << "'; valid ids:\n" << valid_ids();
      return kConfigError;
    }
    selected.push_back(c);
  }
  reg::GridConfig grid = o.grid;
  if (o.s >= 0) grid.s = o.s;
  if (grid.L_max < 0 || grid.M_max < 0 || grid.N < 0 || grid.f_max < 1 || grid.nu_max < 1 || grid.k_max < 1) {
    std::cerr << "ranges must be non-negative (f, nu and k at least 1)\n";
    return kConfigError;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "cannot open " << o.out << '\n';
      return kConfigError;
    }
  }
  std::ostream& os = o.out.empty() ? std::cout : file;

  std::cerr << "qcap verify: L-max=" << grid.L_max << " M-max=" << grid.M_max << " f-max=" << grid.f_max
            << " s=" << (grid.s ? std::to_string(*grid.s) : std::string("0..f")) << " nu-max=" << grid.nu_max
            << " k-max=" << grid.k_max << " trunc=" << grid.N << " jobs=" << (o.serial ? 1 : o.jobs) << '\n';

  const auto tasks = verify::expand(selected, grid);
  std::signal(SIGINT, on_sigint);
  const auto reports = o.serial ? verify::run_serial(tasks, &g_interrupted)
                                : verify::run_parallel(tasks, o.jobs, &g_interrupted);
  std::signal(SIGINT, SIG_DFL);

  for (const auto& r : reports) {
    if (o.format == "json")
      os << verify::to_json(r, !o.no_timing).dump() << '\n';
    else
      os << verify::to_text(r) << '\n';
  }
  const auto summary = verify::summarize(reports);
  if (o.format == "json") {
    auto j = verify::to_json(summary);
    j["interrupted"] = g_interrupted.load();
    os << j.dump() << '\n';
  } else {
    os << summary.passed << '/' << summary.total << " passed";
    if (summary.failed) os << ", " << summary.failed << " failed";
    if (summary.errors) os << ", " << summary.errors << " errors";
    if (g_interrupted) os << " (interrupted after " << reports.size() << " of " << tasks.size() << ")";
    os << '\n';
  }
  os.flush();
  if (g_interrupted) return 1;
  return summary.all_pass() ? 0 : 1;
}

struct SeriesOptions {
  std::string expr;
  std::map<std::string, long> values;
  bool show_order = false;
  std::string format = "text";
};

int cmd_series(const SeriesOptions& o) {
  const auto colon = o.expr.find(':');
  if (colon == std::string::npos) {
    std::cerr << "expression must look like <side>:<case>, e.g. rhs:new_fin_cap_1\n";
    return kConfigError;
  }
  const std::string side_name = o.expr.substr(0, colon), id = o.expr.substr(colon + 1);
  const auto* c = reg::find_case(id);
  if (!c) {
    std::cerr << "unknown case id '" << id << "'; valid ids:\n" << valid_ids();
    return kConfigError;
  }
  const reg::Side* side = c->side(side_name);
  if (!side && side_name == "lhs") side = &c->sides.front();
  if (!side && side_name == "rhs" && c->sides.size() > 1) side = &c->sides[1];
  if (!side) {
    std::cerr << "case " << id << " has no side '" << side_name << "'; sides:";
    for (const auto& s : c->sides) std::cerr << ' ' << s.name;
    std::cerr << '\n';
    return kConfigError;
  }
  reg::Params p;
  for (const auto& name : c->params) p.set(name, o.values.at(name));
  try {
    c->validate(p);
    const QSeries value = side->eval(p);
    if (o.format == "json")
      std::cout << to_json(value).dump() << '\n';
    else
      std::cout << to_string(value, o.show_order) << '\n';
  } catch (const ParamOutOfRange& e) {
    std::cerr << e.what() << '\n';
    return kConfigError;
  }
  return 0;
}

int cmd_counts(int m, long n_max) {
  if (m != 0 && m != 1 && m != 2) {
    std::cerr << "m must be 1 or 2\n";
    return kConfigError;
  }
  if (n_max < 0) {
    std::cerr << "n-max must be non-negative\n";
    return kConfigError;
  }
  const auto rows = part::count_table(n_max);
  bool ok = true;
  if (m == 0)
    std::cout << "n,C_1,D_1,C_2,D_2,match\n";
  else
    std::cout << "n,C_" << m << ",D_" << m << ",match\n";
  for (const auto& r : rows) {
    const bool match = m == 1 ? r.c1 == r.d1 : m == 2 ? r.c2 == r.d2 : (r.c1 == r.d1 && r.c2 == r.d2);
    ok &= match;
    if (m == 0)
      std::cout << r.n << ',' << r.c1 << ',' << r.d1 << ',' << r.c2 << ',' << r.d2 << ',' << match << '\n';
    else if (m == 1)
      std::cout << r.n << ',' << r.c1 << ',' << r.d1 << ',' << match << '\n';
    else
      std::cout << r.n << ',' << r.c2 << ',' << r.d2 << ',' << match << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_weighted(const std::string& theorem, long n_max) {
  const std::map<std::string, part::Weighted> names{
      {"W1", part::Weighted::W1}, {"W2", part::Weighted::W2}, {"W3", part::Weighted::W3}};
  const auto it = names.find(theorem);
  if (it == names.end()) {
    std::cerr << "theorem must be W1, W2 or W3\n";
    return kConfigError;
  }
  if (n_max < 0) {
    std::cerr << "n-max must be non-negative\n";
    return kConfigError;
  }
  std::vector<part::WeightedTotals> rows(static_cast<std::size_t>(n_max + 1));
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n <= n_max; ++n) rows[static_cast<std::size_t>(n)] = part::weighted_sum(it->second, n);
  bool ok = true;
  std::cout << "n,lhs,rhs,match\n";
  for (long n = 0; n <= n_max; ++n) {
    const auto& t = rows[static_cast<std::size_t>(n)];
    ok &= t.lhs == t.rhs;
    std::cout << n << ',' << t.lhs << ',' << t.rhs << ',' << (t.lhs == t.rhs) << '\n';
  }
  return ok ? 0 : 1;
}

struct HierarchyOptions {
  std::string family;
  long f = 1;
  long s = 0;
  long L = 0;
  long trunc = -1;
};

int cmd_hierarchy(const HierarchyOptions& o) {
  const auto fam = hier::family_from_id(o.family);
  if (!fam) {
    std::cerr << "unknown family '" << o.family << "'; valid families:";
    for (auto f : hier::all_families()) std::cerr << ' ' << hier::info(f).id;
    std::cerr << '\n';
    return kConfigError;
  }
  const hier::HierarchySpec spec{*fam, o.f, o.s};
  try {
    hier::validate(spec);
    if (o.trunc >= 0) {
      const QSeries lhs = hier::limit_lhs(spec, o.trunc), rhs = hier::limit_rhs(spec, o.trunc);
      std::cout << "lhs:     " << to_string(lhs, true) << '\n' << "product: " << to_string(rhs, true) << '\n';
      const bool eq = compare(lhs, rhs).equal;
      std::cout << (eq ? "match" : "MISMATCH") << '\n';
      return eq ? 0 : 1;
    }
    if (o.L < 0) throw ParamOutOfRange("L must be non-negative");
    const QSeries multisum = hier::multisum_lhs(spec, o.L);
    const QSeries generated = hier::generate_hierarchy_lhs(spec, o.L);
    const QSeries rhs = hier::rhs(spec, o.L);
    std::cout << "multisum: " << to_string(multisum) << '\n'
              << "bailey:   " << to_string(generated) << '\n'
              << "rhs:      " << to_string(rhs) << '\n';
    const bool eq = multisum == generated && generated == rhs;
    std::cout << (eq ? "match" : "MISMATCH") << '\n';
    return eq ? 0 : 1;
  } catch (const ParamOutOfRange& e) {
    std::cerr << e.what() << '\n';
    return kConfigError;
  }
}

int cmd_recurrences(long L_hi) {
  if (L_hi < 12) {
    std::cerr << "L-max must be at least 12 so every window has length >= 8\n";
    return kConfigError;
  }
  bool ok = true;
  for (const auto& r : rec::verify_catalog(L_hi)) {
    ok &= r.as_expected();
    std::cout << (r.as_expected() ? "ok   " : "FAIL ") << r.entry.recurrence.id << " on " << r.entry.sequence
              << " L=" << r.entry.L_lo << ".." << r.entry.L_hi << ": "
              << (r.report.pass ? "holds" : "fails at L=" + std::to_string(*r.report.first_failing_L))
              << (r.entry.expected_to_hold ? "" : " (uncorrected form, expected to fail)") << '\n';
  }
  for (char w : {'b', 'c'}) {
    const auto rep = rec::verify_factor_witness(w, w == 'b' ? 4 : 6, L_hi);
    ok &= rep.pass();
    std::cout << (rep.pass() ? "ok   " : "FAIL ") << "factor witness " << w << ": residuals "
              << (rep.residuals_vanish ? "vanish" : "nonzero") << ", relation "
              << (rep.relation_holds ? "holds" : "fails") << ", expansion "
              << (rep.expansion_matches ? "matches" : "differs") << '\n';
  }
  for (char w : {'a', 'b', 'c'}) {
    const auto rep = rec::verify_initial_condition_argument(w, L_hi);
    ok &= rep.pass;
    std::cout << (rep.pass ? "ok   " : "FAIL ") << "initial conditions " << w << " up to L=" << rep.L_checked
              << '\n';
  }
  for (const auto& n : rec::negative_controls()) {
    ok &= n.residual_nonzero;
    std::cout << (n.residual_nonzero ? "ok   " : "FAIL ") << "negative control: " << n.name << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Capparelli-type q-series identities"};
  app.require_subcommand(1);

  VerifyOptions vo;
  vo.jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Run identity cases over a parameter grid");
  verify->add_option("--case", vo.cases, "Case id (repeatable)");
  verify->add_flag("--all", vo.all, "Run every registered case");
  verify->add_option("--L-max", vo.grid.L_max, "Largest L")->capture_default_str();
  verify->add_option("--M-max", vo.grid.M_max, "Largest M")->capture_default_str();
  verify->add_option("--f-max", vo.grid.f_max, "Largest hierarchy depth f")->capture_default_str();
  verify->add_option("--s", vo.s, "Only this twist s (default: 0..f)");
  verify->add_option("--nu-max", vo.grid.nu_max, "Largest nu")->capture_default_str();
  verify->add_option("--k-max", vo.grid.k_max, "Largest k of the k-transform")->capture_default_str();
  verify->add_option("--trunc", vo.grid.N, "Truncation order N of series cases")->capture_default_str();
  verify->add_option("--jobs", vo.jobs, "Worker threads (default: QCAP_JOBS or all cores)")->check(CLI::PositiveNumber);
  verify->add_option("--out", vo.out, "Write the report here instead of stdout");
  verify->add_option("--format", vo.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify->add_flag("--serial", vo.serial, "Use the single-threaded reference runner");
  verify->add_flag("--no-timing", vo.no_timing, "Leave millis out of JSON reports");

  SeriesOptions so;
  auto* series = app.add_subcommand("series", "Print one side of a case, e.g. rhs:new_fin_cap_1");
  series->add_option("expr", so.expr, "<side>:<case>")->required();
  long L = 0, M = 0, f = 1, s = 0, nu = 1, k = 1, j = 0, a = 0, base = 1, N = 20;
  std::optional<long> z_shift;
  series->add_option("--L", L)->capture_default_str();
  series->add_option("--M", M)->capture_default_str();
  series->add_option("--f", f)->capture_default_str();
  series->add_option("--s", s)->capture_default_str();
  series->add_option("--nu", nu)->capture_default_str();
  series->add_option("--k", k, "Base exponent of theta cases and k-transform")->capture_default_str();
  series->add_option("--j", j)->capture_default_str();
  series->add_option("--a", a)->capture_default_str();
  series->add_option("--base", base)->capture_default_str();
  series->add_option("--z-shift", z_shift, "z = q^t (default 0; 1 for the q-binomial theorem)");
  series->add_option("--trunc", N, "Truncation order N")->capture_default_str();
  series->add_flag("--show-order", so.show_order, "Append O(q^(N+1)) to truncated series");
  series->add_option("--format", so.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  int m = 0;
  long n_max = 40;
  std::string theorem = "W1";
  auto* partitions = app.add_subcommand("partitions", "Partition count tables");
  partitions->require_subcommand(1);
  auto* counts = partitions->add_subcommand("counts", "C_m(n) and D_m(n)");
  counts->add_option("--m", m, "1 or 2 (default: both)");
  counts->add_option("--n-max", n_max)->capture_default_str();
  auto* weighted = partitions->add_subcommand("weighted", "Signed totals of a weighted theorem");
  weighted->add_option("--theorem", theorem, "W1, W2 or W3")->capture_default_str();
  weighted->add_option("--n-max", n_max)->capture_default_str();

  HierarchyOptions ho;
  auto* hierarchy = app.add_subcommand("hierarchy", "Evaluate a Bailey hierarchy at one depth");
  hierarchy->add_option("--family", ho.family, "Family id, e.g. fin_cap1")->required();
  hierarchy->add_option("--f", ho.f)->capture_default_str();
  hierarchy->add_option("--s", ho.s)->capture_default_str();
  hierarchy->add_option("--L", ho.L)->capture_default_str();
  hierarchy->add_option("--trunc", ho.trunc, "Evaluate the L -> infinity limit to this order instead");

  long rec_L = 12;
  auto* recurrences = app.add_subcommand("recurrences", "Check the recurrence catalog and factor witnesses");
  recurrences->add_option("--L-max", rec_L)->capture_default_str();

  app.add_subcommand("list", "List case ids with parameters and sides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*series) {
      const long t = z_shift.value_or(0), z = z_shift.value_or(1);
      so.values = {{"L", L}, {"M", M}, {"f", f}, {"s", s}, {"nu", nu}, {"k", k}, {"j", j},
                   {"a", a}, {"base", base}, {"t", t}, {"z", z}, {"N", N}};
      return cmd_series(so);
    }
    if (*counts) return cmd_counts(m, n_max);
    if (*weighted) return cmd_weighted(theorem, n_max);
    if (*hierarchy) return cmd_hierarchy(ho);
    if (*recurrences) return cmd_recurrences(rec_L);
    for (const auto& c : reg::registry()) {
      std::cout << c.id << " (" << reg::mode_name(c.mode) << ") params:";
      for (const auto& p : c.params) std::cout << ' ' << p;
      std::cout << " sides:";
      for (const auto& sd : c.sides) std::cout << ' ' << sd.name;
      std::cout << " - " << c.summary << '\n';
    }
    return 0;
  } catch (const qcap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
