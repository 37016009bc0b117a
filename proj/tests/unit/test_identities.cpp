#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "qcap/capparelli.hpp"
#include "qcap/qcombinat.hpp"
#include "qcap/partitions.hpp"
#include "qcap/registry.hpp"
#include "qcap/verify.hpp"

using namespace qcap;

namespace {

verify::Report run(const std::string& id, reg::Params p) {
  const auto* c = reg::find_case(id);
  REQUIRE_MESSAGE(c, id);
  return verify::run_task({c, std::move(p)});
}

void check_pass(const std::string& id, reg::Params p) {
  const auto r = run(id, p);
  INFO(id << " [" << p.to_string() << "] " << verify::to_text(r));
  CHECK(r.verdict == verify::Verdict::Pass);
}

QSeries eval(const std::string& id, const std::string& side, reg::Params p) {
  const auto* c = reg::find_case(id);
  REQUIRE(c);
  const auto* s = c->side(side);
  REQUIRE_MESSAGE(s, side);
  return s->eval(p);
}

// sum_j chi(j+1) q^(j^2) [2L, L-j] from the Pascal oracle.
QSeries fin_cap1_rhs_oracle(long L) {
  oracle::Poly s;
  for (long j = -L; j <= L; ++j)
    if (const int chi = jacobi3(j + 1))
      s = oracle::add(s, oracle::mul(oracle::monomial(j * j, chi), oracle::gaussian(2 * L, L - j)));
  return oracle::to_series(s);
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& all = reg::registry();
  REQUIRE(!all.empty());
  std::set<std::string> ids;
  for (const auto& c : all) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.sides.size() >= 2);
    CHECK(!c.grid(reg::GridConfig{}).empty());
  }
  CHECK(reg::find_case("nonsense") == nullptr);
}

TEST_CASE("new finite identity spot values") {
  for (long L : {0L, 1L}) {
    CHECK(eval("new_fin_cap_1", "lhs", {{"L", L}}) == QSeries::one());
    CHECK(eval("new_fin_cap_1", "rhs", {{"L", L}}) == QSeries::one());
  }
  const QSeries expected = QSeries::from_coeffs(0, {1, 0, 1, 0, -1});
  CHECK(eval("new_fin_cap_1", "lhs", {{"L", 2}}) == expected);
  CHECK(eval("new_fin_cap_1", "rhs", {{"L", 2}}) == expected);
  for (long L = 0; L <= 8; ++L) CHECK(cap::fin_cap_rhs(1, L) == fin_cap1_rhs_oracle(L));
  for (const char* form : {"jacobi", "split", "rational"}) {
    CHECK(eval("rhs_rewrites_1", form, {{"L", 2}}) == expected);
    CHECK(eval("rhs_rewrites_1", form, {{"L", 0}}) == QSeries::one());
  }
  check_pass("rhs_rewrites_2", {{"L", 5}});
}

TEST_CASE("finite identity examples") {
  check_pass("fin_cap_roundtri_1", {{"L", 0}});
  check_pass("fin_cap_roundtri_1", {{"L", 1}});
  check_pass("fin_cap_roundtri_2", {{"L", 0}});
  check_pass("fin_cap_binomial_1", {{"M", 0}});
  check_pass("fin_cap_binomial_2", {{"M", 1}});
  check_pass("fin_cap_binomial_3", {{"M", 2}});
  check_pass("seed_identity", {{"L", 0}, {"M", 0}});
  check_pass("seed_identity", {{"L", 1}, {"M", 0}});
  check_pass("seed_identity", {{"L", 0}, {"M", 1}});
  check_pass("seed_identity", {{"L", 3}, {"M", 3}});
  check_pass("seed_limit_M", {{"L", 3}, {"N", 20}});
  check_pass("seed_limit_L", {{"M", 3}, {"N", 20}});
  check_pass("s_hierarchy", {{"nu", 1}, {"L", 0}, {"M", 0}});
  check_pass("s_hierarchy", {{"nu", 1}, {"L", 2}, {"M", 2}});
  CHECK(eval("fin_cap2_rhs_alt", "rhs", {{"L", 0}}) == QSeries::one());
  for (long L = 1; L <= 8; ++L) check_pass("fin_cap2_rhs_alt", {{"L", L}});
  for (long k = 1; k <= 3; ++k) check_pass("k_transform", {{"k", k}, {"L", 0}});
  check_pass("k_transform", {{"k", 1}, {"L", 3}});
  check_pass("k_transform", {{"k", 3}, {"L", 5}});
  check_pass("cor12", {{"L", 3}});
  check_pass("hierarchy_fin_cap1", {{"f", 1}, {"L", 3}});
  check_pass("double_fin_hierarchy", {{"f", 2}, {"s", 1}, {"L", 3}});
  check_pass("dual_identity_1", {{"L", 3}});
  check_pass("dual_identity_2", {{"L", 4}});
  CHECK(eval("dual_identity_1", "lhs", {{"L", 0}}) == QSeries::one());
  CHECK(cap::dual_construction(1, 3) == shift(invert_q(cap::fin_cap_lhs(1, 3)), 9));
}

TEST_CASE("truncated identity examples") {
  const QSeries a0 = eval("cap_analytic_1", "lhs", {{"N", 0}});
  CHECK(a0 == truncate(QSeries::one(), 0));
  check_pass("cap_analytic_1", {{"N", 20}});
  check_pass("cap_analytic_2", {{"N", 20}});
  const QSeries a20 = eval("cap_analytic_1", "lhs", {{"N", 20}});
  CHECK(a20.coeff(2) == 1);
  CHECK(a20.coeff(3) == 1);
  for (long n = 0; n <= 20; ++n) CHECK(a20.coeff(n) == part::count_C(1, n));
  check_pass("s_hierarchy_limit", {{"nu", 1}, {"N", 20}});
  check_pass("cap2_corollary", {{"N", 30}});
  check_pass("hierarchy_cap1_alternate", {{"f", 1}, {"s", 0}, {"N", 20}});
  check_pass("cap1_alternate_s0", {{"f", 1}, {"N", 20}});
  check_pass("corollary_transform", {{"nu", 1}, {"N", 15}});
  check_pass("corollary_transform", {{"nu", 2}, {"N", 10}});
  check_pass("corollary_transform", {{"nu", 1}, {"N", 0}});
  for (int b = 0; b <= 2; ++b) {
    const std::string id = "dual_limit_" + std::to_string(b);
    check_pass(id, {{"N", 25}});
    check_pass(id, {{"N", 0}});
  }
  CHECK(eval("dual_limit_1", "sum", {{"N", 0}}).coeff(0) == 1);
  for (const char* id : {"hierarchy_cap1_limit", "hierarchy_cap2_limit", "hierarchy_cap1_binomial_limit"})
    CHECK(eval(id, "lhs", {{"f", 1}, {"N", 0}}) == truncate(QSeries::one(), 0));
}

TEST_CASE("cap2 corollary against an independent enumeration") {
  const QSeries lhs = eval("cap2_corollary", "lhs", {{"N", 30}});
  for (long n = 0; n <= 30; ++n) CHECK(lhs.coeff(n) == part::count(n, part::no_multiple_of_3));
}

TEST_CASE("weighted generating functions") {
  for (int w = 1; w <= 3; ++w) check_pass("weighted_gf_" + std::to_string(w), {{"N", 25}});
}

TEST_CASE("verdicts") {
  const auto* c = reg::find_case("new_fin_cap_1");
  REQUIRE(c);
  const auto bad = verify::run_task({c, {{"L", -1}}});
  CHECK(bad.verdict == verify::Verdict::Error);
  CHECK(!bad.error.empty());

  reg::IdentityCase wrong = *c;
  wrong.sides[1].eval = [](const reg::Params& p) { return cap::fin_cap_rhs(1, p.get("L")) + QSeries::monomial(3); };
  const auto fail = verify::run_task({&wrong, {{"L", 2}}});
  CHECK(fail.verdict == verify::Verdict::Fail);
  REQUIRE(fail.first_mismatch);
  CHECK(fail.first_mismatch->exponent == 3);
  CHECK(fail.first_mismatch->lhs == 0);
  CHECK(fail.first_mismatch->rhs == 1);
}

TEST_CASE("reports are deterministic and independent of the runner") {
  std::vector<const reg::IdentityCase*> cases;
  for (const char* id : {"new_fin_cap_2", "hierarchy_fin_cap2", "cap_analytic_2", "jtp"}) cases.push_back(reg::find_case(id));
  reg::GridConfig g;
  g.L_max = 4;
  g.f_max = 2;
  g.N = 15;
  const auto tasks = verify::expand(cases, g);
  auto dump = [](const std::vector<verify::Report>& rs) {
    std::string s;
    for (const auto& r : rs) s += verify::to_json(r, false).dump() + '\n';
    return s;
  };
  const std::string serial = dump(verify::run_serial(tasks));
  CHECK(serial == dump(verify::run_parallel(tasks, 4)));
  CHECK(serial == dump(verify::run_parallel(tasks, 2)));
  CHECK(serial.find("millis") == std::string::npos);
  CHECK(verify::summarize(verify::run_serial(tasks)).all_pass());

  std::atomic<bool> cancel{true};
  CHECK(verify::run_parallel(tasks, 2, &cancel).empty());
}

TEST_CASE("report schema") {
  const auto r = run("cap_analytic_1", {{"N", 10}});
  const auto j = verify::to_json(r);
  CHECK(j["id"] == "cap_analytic_1");
  CHECK(j["params"]["N"] == 10);
  CHECK(j["mode"] == "truncated-agreement up to 10");
  CHECK(j["verdict"] == "pass");
  CHECK(j.contains("millis"));
  const auto e = verify::to_json(run("new_fin_cap_1", {{"L", 3}}));
  CHECK(e["mode"] == "exact");
  CHECK(e["lhs_degree"] == e["rhs_degree"]);
}
