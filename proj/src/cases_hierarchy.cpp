#include "case_util.hpp"
#include "qcap/bailey.hpp"
#include "qcap/hierarchy.hpp"

namespace qcap::reg {

using namespace detail;

namespace {

hier::HierarchySpec spec_of(hier::Family family, const Params& p) {
  return {family, p.get("f"), p.find("s").value_or(0)};
}

std::vector<Params> hierarchy_grid(bool twisted, const GridConfig& g) {
  std::vector<Params> out;
  for (long f = 1; f <= g.f_max; ++f) {
    std::vector<long> ss;
    if (!twisted)
      ss = {-1};
    else if (g.s)
      ss = {*g.s};
    else
      for (long s = 0; s <= f; ++s) ss.push_back(s);
    for (long s : ss) {
      if (twisted && s > f) continue;
      for (long L = 0; L <= g.L_max; ++L) {
        Params p{{"f", f}};
        if (twisted) p.set("s", s);
        p.set("L", L);
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace

static std::string hierarchy_case_id(hier::Family family) {
  if (family == hier::Family::Double) return "double_fin_hierarchy";
  return std::string("hierarchy_") + hier::info(family).id;
}

void add_hierarchy_cases(std::vector<IdentityCase>& out) {
  for (hier::Family fam : hier::all_families()) {
    const bool twisted = fam == hier::Family::Double;
    IdentityCase c;
    c.id = hierarchy_case_id(fam);
    c.summary = std::string("finite Bailey hierarchy seeded by ") + hier::info(fam).id;
    c.params = twisted ? std::vector<std::string>{"f", "s", "L"} : std::vector<std::string>{"f", "L"};
    c.sides = {
        side("multisum", [fam](const Params& p) { return hier::multisum_lhs(spec_of(fam, p), p.get("L")); }),
        side("bailey",
             [fam](const Params& p) { return hier::generate_hierarchy_lhs(spec_of(fam, p), p.get("L")); }),
        side("alpha",
             [fam](const Params& p) {
               return bailey::bailey_F(hier::generated_alpha(spec_of(fam, p)), p.get("L"));
             }),
        side("rhs", [fam](const Params& p) { return hier::rhs(spec_of(fam, p), p.get("L")); })};
    c.validate = [fam](const Params& p) {
      hier::validate(spec_of(fam, p));
      non_negative(p, {"L"});
    };
    c.grid = [twisted](const GridConfig& g) { return hierarchy_grid(twisted, g); };
    out.push_back(std::move(c));
  }

  out.push_back(single_param_case(
      "first_bailey_application", "one Bailey step on the twisted seed", "L",
      {side("multisum", [](const Params& p) { return hier::first_application_lhs(p.get("L")); }),
       side("bailey",
            [](const Params& p) {
              return hier::generate_hierarchy_lhs({hier::Family::Double, 1, 1}, p.get("L"));
            }),
       side("rhs", [](const Params& p) { return hier::first_application_rhs(p.get("L")); })},
      L_limit));
  out.push_back(single_param_case(
      "after_k_transform", "q^L times the first application, rewritten by the k-transform", "L",
      {side("lhs", [](const Params& p) { return hier::after_k_transform_lhs(p.get("L")); }),
       side("rhs", [](const Params& p) { return hier::after_k_transform_rhs(p.get("L")); })},
      L_limit));

  for (const bailey::BaileyAlpha& alpha : bailey::catalog()) {
    IdentityCase c;
    c.id = "bailey_lemma_" + alpha.name;
    c.summary = "one Bailey step on alpha " + alpha.name;
    c.params = {"a", "base", "L"};
    auto with = [alpha](const Params& p) {
      return bailey::rebased(alpha, static_cast<int>(p.get("a")), p.get("base"));
    };
    c.sides = {side("transform",
                    [with](const Params& p) {
                      const bailey::BaileyAlpha al = with(p);
                      const bailey::Sequence F = [al](long r) { return bailey::bailey_F(al, r); };
                      return bailey::bailey_lhs_transform(F, al.a, al.base)(p.get("L"));
                    }),
               side("stepped", [with](const Params& p) {
                 return bailey::bailey_F(bailey::bailey_step(with(p)), p.get("L"));
               })};
    c.validate = [](const Params& p) {
      require(p.get("a") == 0 || p.get("a") == 1, "a must be 0 or 1");
      require(p.get("base") >= 1, "base must be positive");
      non_negative(p, {"L"});
    };
    c.grid = [](const GridConfig& g) {
      std::vector<Params> out;
      for (long a = 0; a <= 1; ++a)
        for (long base : {1L, 3L})
          for (long L = 0; L <= g.L_max; ++L) out.push_back(Params{{"a", a}, {"base", base}, {"L", L}});
      return out;
    };
    out.push_back(std::move(c));
  }
}

}  // namespace qcap::reg
