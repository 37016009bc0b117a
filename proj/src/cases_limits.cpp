#include <array>

#include "case_util.hpp"
#include "qcap/capparelli.hpp"
#include "qcap/hierarchy.hpp"
#include "qcap/partitions.hpp"
#include "qcap/qcombinat.hpp"

namespace qcap::reg {

using namespace detail;

namespace {

IdentityCase truncated_case(std::string id, std::string summary, std::vector<std::string> params,
                            std::vector<Side> sides, std::function<void(const Params&)> validate,
                            std::function<std::vector<Params>(const GridConfig&)> grid) {
  IdentityCase c;
  c.id = std::move(id);
  c.summary = std::move(summary);
  c.params = std::move(params);
  c.mode = Mode::TruncatedSeries;
  c.sides = std::move(sides);
  c.validate = [v = std::move(validate)](const Params& p) {
    non_negative(p, {"N"});
    if (v) v(p);
  };
  c.grid = std::move(grid);
  return c;
}

std::vector<Params> with_N(std::vector<Params> grid, const GridConfig& g) {
  for (auto& p : grid) p.set("N", g.N);
  return grid;
}

std::string limit_case_id(hier::Family family) {
  if (family == hier::Family::Double) return "hierarchy_cap1_alternate";
  std::string id = hier::info(family).id;
  if (id.rfind("fin_", 0) == 0) id = id.substr(4);
  return "hierarchy_" + id + "_limit";
}

hier::HierarchySpec spec_of(hier::Family family, const Params& p) {
  return {family, p.get("f"), p.find("s").value_or(0)};
}

std::vector<Params> f_grid(bool twisted, const GridConfig& g) {
  std::vector<Params> out;
  for (long f = 1; f <= g.f_max; ++f) {
    if (!twisted) {
      out.push_back(Params{{"f", f}});
      continue;
    }
    for (long s = 0; s <= f; ++s)
      if (!g.s || *g.s == s) out.push_back(Params{{"f", f}, {"s", s}});
  }
  return with_N(std::move(out), g);
}

QSeries euler_ratio_inverse(long N) {
  const std::array<PochSpec, 1> num{PochSpec::infinite(3, 3)};
  const std::array<PochSpec, 1> den{PochSpec::infinite(1, 1)};
  return infinite_product(num, den, N);
}

// sum_m (-1)^(m+1) chi(m-b) q^(m(m+1)/2) / (q;q)_m.
QSeries signed_triangular_sum(int b, long N) {
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  for (long m = 0; m * (m + 1) / 2 <= N; ++m) {
    const int c = jacobi3(m - b);
    if (c == 0) continue;
    const long e = m * (m + 1) / 2;
    acc.add(inverse_pochhammer(PochSpec::factorial(m, 1), N - e), e, (m % 2 == 1 ? 1 : -1) * c);
  }
  return acc.result();
}

}  // namespace

void add_limit_cases(std::vector<IdentityCase>& out) {
  for (int w = 1; w <= 2; ++w)
    out.push_back(series_case("cap_analytic_" + std::to_string(w), "analytic Capparelli identity",
                              {side("lhs", [w](const Params& p) { return cap::analytic_lhs(w, p.get("N")); }),
                               side("product", [w](const Params& p) { return cap::analytic_rhs(w, p.get("N")); })}));

  out.push_back(truncated_case(
      "s_hierarchy_limit", "double limit of the nu-hierarchy", {"nu", "N"},
      {side("lhs", [](const Params& p) { return cap::s_hierarchy_limit_lhs(p.get("nu"), p.get("N")); }),
       side("product", [](const Params& p) { return cap::s_hierarchy_limit_rhs(p.get("nu"), p.get("N")); })},
      [](const Params& p) { require(p.get("nu") >= 1, "nu must be at least 1"); },
      [](const GridConfig& g) { return with_N(range_grid("nu", 1, g.nu_max), g); }));

  for (hier::Family fam : hier::all_families()) {
    const bool twisted = fam == hier::Family::Double;
    out.push_back(truncated_case(
        limit_case_id(fam), std::string("L -> infinity limit of the hierarchy seeded by ") + hier::info(fam).id,
        twisted ? std::vector<std::string>{"f", "s", "N"} : std::vector<std::string>{"f", "N"},
        {side("lhs", [fam](const Params& p) { return hier::limit_lhs(spec_of(fam, p), p.get("N")); }),
         side("product", [fam](const Params& p) { return hier::limit_rhs(spec_of(fam, p), p.get("N")); })},
        [fam](const Params& p) { hier::validate(spec_of(fam, p)); },
        [twisted](const GridConfig& g) { return f_grid(twisted, g); }));
  }

  out.push_back(series_case(
      "cap2_corollary", "f = 1 limit of the second hierarchy: partitions without multiples of 3",
      {side("lhs", [](const Params& p) { return hier::limit_lhs({hier::Family::Cap2, 1, 0}, p.get("N")); }),
       side("product", [](const Params& p) { return hier::cap2_corollary_product(p.get("N")); }),
       side("count", [](const Params& p) {
         return part::gf_from_counts([](long n) { return part::count(n, part::no_multiple_of_3); }, p.get("N"));
       })}));

  out.push_back(truncated_case(
      "cap1_alternate_s0", "s = 0 alternate product equals the first hierarchy product", {"f", "N"},
      {side("alternate", [](const Params& p) { return hier::limit_rhs({hier::Family::Double, p.get("f"), 0}, p.get("N")); }),
       side("cap1", [](const Params& p) { return hier::limit_rhs({hier::Family::Cap1, p.get("f"), 0}, p.get("N")); })},
      [](const Params& p) { require(p.get("f") >= 1, "f must be at least 1"); },
      [](const GridConfig& g) { return with_N(range_grid("f", 1, g.f_max), g); }));

  out.push_back(truncated_case(
      "corollary_transform", "nu-hierarchy limit sum = base q^3 hierarchy limit sum at f = nu(nu+3)/2",
      {"nu", "N"},
      {side("s_hierarchy", [](const Params& p) { return cap::s_hierarchy_limit_lhs(p.get("nu"), p.get("N")); }),
       side("hierarchy", [](const Params& p) {
         const hier::HierarchySpec spec{hier::Family::Cap1Binomial, hier::corollary_depth(p.get("nu")), 0};
         return hier::limit_lhs(spec, p.get("N"));
       })},
      [](const Params& p) { require(p.get("nu") >= 1, "nu must be at least 1"); },
      [](const GridConfig& g) { return with_N(range_grid("nu", 1, g.nu_max), g); }));

  for (int b = 0; b <= 2; ++b)
    out.push_back(series_case(
        "dual_limit_" + std::to_string(b), "limits of the dual identities",
        {side("sum", [b](const Params& p) { return cap::dual_limit_sum(b, p.get("N")); }),
         side("unified", [b](const Params& p) { return cap::dual_limit_unified(b, p.get("N")); }),
         side("corollary", [b](const Params& p) { return cap::dual_limit_corollary(b, p.get("N")); })}));

  // Weighted theorems: W1 <-> b = 0, W2 <-> b = 2, W3 <-> -(b = 1).
  struct WeightedLink {
    part::Weighted theorem;
    int b;
    long sign;
  };
  const std::array<WeightedLink, 3> weighted{
      {{part::Weighted::W1, 0, 1}, {part::Weighted::W2, 2, 1}, {part::Weighted::W3, 1, -1}}};
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    const auto [w, b, sign] = weighted[i];
    out.push_back(series_case(
        "weighted_gf_" + std::to_string(i + 1), "signed partition counts of a weighted theorem",
        {side("lhs_count",
              [w](const Params& p) {
                return part::gf_from_counts([w](long n) { return part::weighted_sum(w, n).lhs; }, p.get("N"));
              }),
         side("rhs_count",
              [w](const Params& p) {
                return part::gf_from_counts([w](long n) { return part::weighted_sum(w, n).rhs; }, p.get("N"));
              }),
         side("series", [b, sign](const Params& p) { return signed_triangular_sum(b, p.get("N")) * Int(sign); }),
         side("dual_limit", [b, sign](const Params& p) {
           const long N = p.get("N");
           return truncate(cap::dual_limit_sum(b, N) * euler_ratio_inverse(N), N) * Int(sign);
         })}));
  }

  // L -> infinity and M -> infinity specializations of the seed identity.
  out.push_back(truncated_case(
      "seed_limit_M", "(q^3;q^3)_L seed(L, M) -> trinomial identity as M -> infinity", {"L", "N"},
      {side("seed",
            [](const Params& p) {
              const long L = p.get("L"), N = p.get("N");
              return truncate(qfactorial(L, 3) * cap::seed_lhs(L, N + L + 1), N);
            }),
       side("roundtri", [](const Params& p) { return truncate(cap::roundtri_rhs(1, p.get("L")), p.get("N")); })},
      [](const Params& p) { non_negative(p, {"L"}); },
      [](const GridConfig& g) { return with_N(range_grid("L", 0, g.L_max), g); }));
  out.push_back(truncated_case(
      "seed_limit_L", "seed(L, M) -> base q^3 binomial identity / (q^3;q^3)_M as L -> infinity", {"M", "N"},
      {side("seed",
            [](const Params& p) {
              const long M = p.get("M"), N = p.get("N");
              return truncate(cap::seed_lhs(N + M + 1, M), N);
            }),
       side("binomial", [](const Params& p) {
         const long M = p.get("M"), N = p.get("N");
         return truncate(cap::binomial_rhs(1, M) * inverse_pochhammer(PochSpec::factorial(M, 3), N), N);
       })},
      [](const Params& p) { non_negative(p, {"M"}); },
      [](const GridConfig& g) { return with_N(range_grid("M", 0, g.M_max), g); }));
}

}  // namespace qcap::reg
