#include "case_util.hpp"
#include "qcap/capparelli.hpp"

namespace qcap::reg {

using namespace detail;

namespace {

IdentityCase pair_case(std::string id, std::string summary, const std::string& name,
                       std::function<QSeries(long)> lhs, std::function<QSeries(long)> rhs,
                       long (*limit)(const GridConfig&)) {
  return single_param_case(
      std::move(id), std::move(summary), name,
      {side("lhs", [lhs, name](const Params& p) { return lhs(p.get(name)); }),
       side("rhs", [rhs, name](const Params& p) { return rhs(p.get(name)); })},
      limit);
}

IdentityCase two_param_case(std::string id, std::string summary, std::vector<Side> sides) {
  IdentityCase c;
  c.id = std::move(id);
  c.summary = std::move(summary);
  c.params = {"L", "M"};
  c.sides = std::move(sides);
  c.validate = [](const Params& p) { non_negative(p, {"L", "M"}); };
  c.grid = [](const GridConfig& g) {
    return product_grid(range_grid("L", 0, g.L_max), range_grid("M", 0, g.M_max));
  };
  return c;
}

}  // namespace

void add_capparelli_cases(std::vector<IdentityCase>& out) {
  for (int w = 1; w <= 2; ++w) {
    const std::string n = std::to_string(w);
    out.push_back(pair_case(
        "fin_cap_roundtri_" + n, "binomial double sum = trinomial sum", "L",
        [w](long L) { return cap::roundtri_lhs(w, L); }, [w](long L) { return cap::roundtri_rhs(w, L); },
        L_limit));
    out.push_back(pair_case(
        "new_fin_cap_" + n, "multinomial double sum = Jacobi-weighted binomial sum", "L",
        [w](long L) { return cap::fin_cap_lhs(w, L); }, [w](long L) { return cap::fin_cap_rhs(w, L); },
        L_limit));
    out.push_back(single_param_case(
        "rhs_rewrites_" + n, "three forms of the Jacobi-weighted right side", "L",
        {side("jacobi", [w](const Params& p) { return cap::fin_cap_rhs(w, p.get("L")); }),
         side("split", [w](const Params& p) { return cap::rhs_split(w, p.get("L")); }),
         side("rational", [w](const Params& p) { return cap::rhs_rational(w, p.get("L")); })},
        L_limit));
    out.push_back(single_param_case(
        "dual_identity_" + n, "q -> 1/q images of the new finite identities", "L",
        {side("lhs", [w](const Params& p) { return cap::dual_lhs(w, p.get("L")); }),
         side("rhs", [w](const Params& p) { return cap::dual_rhs(w, p.get("L")); }),
         side("construction", [w](const Params& p) { return cap::dual_construction(w, p.get("L")); })},
        L_limit));
  }
  for (int w = 1; w <= 3; ++w)
    out.push_back(pair_case(
        "fin_cap_binomial_" + std::to_string(w), "base q^3 binomial identity", "M",
        [w](long M) { return cap::binomial_lhs(w, M); }, [w](long M) { return cap::binomial_rhs(w, M); },
        M_limit));

  out.push_back(pair_case("fin_cap2_rhs_alt", "[2L, L-j] sum = [2L+1, L-j] sum", "L",
                          [](long L) { return cap::fin_cap_rhs(2, L); }, cap::fin_cap2_rhs_alt, L_limit));
  out.push_back(pair_case("jacobi_antisymmetry", "sum_j chi(j) q^(j^2) [2L, L-j] = 0", "L",
                          cap::antisymmetric_sum, [](long) { return QSeries(); }, L_limit));
  out.push_back(pair_case("cor12", "q^L times the first new identity", "L", cap::cor12_lhs, cap::cor12_rhs,
                          L_limit));

  out.push_back(two_param_case("seed_identity", "parity-restricted double sum = Warnaar S sum",
                               {side("lhs", [](const Params& p) { return cap::seed_lhs(p.get("L"), p.get("M")); }),
                                side("rhs", [](const Params& p) { return cap::seed_rhs(p.get("L"), p.get("M")); })}));

  {
    IdentityCase c;
    c.id = "k_transform";
    c.summary = "chi(j+1) q^(k j(j-1)) sum = q^L chi(j+1) q^(k j^2-(k-1) j) sum";
    c.params = {"k", "L"};
    c.sides = {side("lhs", [](const Params& p) { return cap::k_transform_lhs(p.get("k"), p.get("L")); }),
               side("rhs", [](const Params& p) { return cap::k_transform_rhs(p.get("k"), p.get("L")); })};
    c.validate = [](const Params& p) {
      require(p.get("k") >= 1, "k must be at least 1");
      non_negative(p, {"L"});
    };
    c.grid = [](const GridConfig& g) { return product_grid(range_grid("k", 1, g.k_max), range_grid("L", 0, g.L_max)); };
    out.push_back(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "s_hierarchy";
    c.summary = "nu-fold Bailey hierarchy of the seed identity";
    c.params = {"nu", "L", "M"};
    c.sides = {
        side("lhs", [](const Params& p) { return cap::s_hierarchy_lhs(p.get("nu"), p.get("L"), p.get("M")); }),
        side("rhs", [](const Params& p) { return cap::s_hierarchy_rhs(p.get("nu"), p.get("L"), p.get("M")); })};
    c.validate = [](const Params& p) {
      require(p.get("nu") >= 1, "nu must be at least 1");
      non_negative(p, {"L", "M"});
    };
    c.grid = [](const GridConfig& g) {
      return product_grid(range_grid("nu", 1, g.nu_max),
                          product_grid(range_grid("L", 0, g.L_max), range_grid("M", 0, g.M_max)));
    };
    out.push_back(std::move(c));
  }
}

}  // namespace qcap::reg
