#include <array>

#include "case_util.hpp"
#include "qcap/capparelli.hpp"
#include "qcap/classical.hpp"
#include "qcap/partitions.hpp"
#include "qcap/qcombinat.hpp"

namespace qcap::reg {

using namespace detail;

namespace {

IdentityCase truncated(std::string id, std::string summary, std::vector<std::string> params,
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
    v(p);
  };
  c.grid = std::move(grid);
  return c;
}

// Bases of the theta specializations met in the hierarchy limits.
constexpr std::array<long, 4> kThetaBases{1, 2, 3, 6};

std::vector<Params> theta_grid(const GridConfig& g, long extra) {
  std::vector<Params> out;
  for (long k : kThetaBases)
    for (long t = -k - extra; t <= k + extra; ++t) out.push_back(Params{{"k", k}, {"t", t}, {"N", g.N}});
  return out;
}

void positive_base(const Params& p) { require(p.get("k") >= 1, "k must be positive"); }

QSeries count_gf(const part::Predicate& pred, long N) {
  return part::gf_from_counts([&pred](long n) { return part::count(n, pred); }, N);
}

}  // namespace

void add_classical_cases(std::vector<IdentityCase>& out) {
  for (int sign : {1, -1}) {
    out.push_back(truncated(
        sign > 0 ? "jtp" : "jtp_alternating",
        sign > 0 ? "Jacobi triple product, z = q^t" : "Jacobi triple product, z = -q^t", {"k", "t", "N"},
        {side("sum", [sign](const Params& p) { return classical::jtp_sum(p.get("t"), p.get("k"), p.get("N"), sign); }),
         side("product",
              [sign](const Params& p) { return classical::jtp_product(p.get("t"), p.get("k"), p.get("N"), sign); })},
        positive_base, [](const GridConfig& g) { return theta_grid(g, 2); }));
  }
  out.push_back(truncated(
      "quintuple", "quintuple product, z = q^t", {"k", "t", "N"},
      {side("sum", [](const Params& p) { return classical::quintuple_sum(p.get("t"), p.get("k"), p.get("N")); }),
       side("product",
            [](const Params& p) { return classical::quintuple_product(p.get("t"), p.get("k"), p.get("N")); })},
      positive_base, [](const GridConfig& g) { return theta_grid(g, 0); }));

  out.push_back(truncated(
      "qbinomial_theorem", "q-binomial theorem, a = q^s, z = q^z", {"s", "z", "N"},
      {side("sum", [](const Params& p) { return classical::q_binomial_theorem_lhs(p.get("s"), p.get("z"), p.get("N")); }),
       side("product",
            [](const Params& p) { return classical::q_binomial_theorem_rhs(p.get("s"), p.get("z"), p.get("N")); })},
      [](const Params& p) { require(p.get("z") >= 1, "z must be at least 1"); },
      [](const GridConfig& g) {
        std::vector<Params> out;
        for (long s = -4; s <= 4; ++s)
          for (long z = 1; z <= 3; ++z) out.push_back(Params{{"s", s}, {"z", z}, {"N", g.N}});
        return out;
      }));
  out.push_back(truncated(
      "qbinomial_theorem_a0", "q-binomial theorem, a = 0, z = q^z", {"z", "N"},
      {side("sum",
            [](const Params& p) {
              return classical::q_binomial_theorem_lhs(classical::ZeroA{}, p.get("z"), p.get("N"));
            }),
       side("product",
            [](const Params& p) {
              return classical::q_binomial_theorem_rhs(classical::ZeroA{}, p.get("z"), p.get("N"));
            })},
      [](const Params& p) { require(p.get("z") >= 1, "z must be at least 1"); },
      [](const GridConfig& g) {
        std::vector<Params> out;
        for (long z = 1; z <= 3; ++z) out.push_back(Params{{"z", z}, {"N", g.N}});
        return out;
      }));

  out.push_back(truncated(
      "binomial_limit", "[L, j] -> 1/(q;q)_j at the proxy L = N + j + 1", {"j", "N"},
      {side("binomial",
            [](const Params& p) {
              const long j = p.get("j"), N = p.get("N");
              return classical::binomial_limit_lhs(classical::binomial_limit_threshold(j, N), j, N);
            }),
       side("limit", [](const Params& p) { return classical::binomial_limit_rhs(p.get("j"), p.get("N")); })},
      [](const Params& p) { require(p.get("j") >= 0, "j must be non-negative"); },
      [](const GridConfig& g) { return product_grid(range_grid("j", 0, 4), {Params{{"N", g.N}}}); }));
  out.push_back(truncated(
      "central_binomial_limit", "[2L+a, L-j] -> 1/(q;q)_inf at the proxy L = N + |j| + 1", {"j", "a", "N"},
      {side("binomial",
            [](const Params& p) {
              const long j = p.get("j"), N = p.get("N");
              return classical::central_limit_lhs(classical::central_limit_threshold(j, N), j, p.get("a"), N);
            }),
       side("limit", [](const Params& p) { return classical::central_limit_rhs(p.get("N")); })},
      [](const Params& p) { require(p.get("a") == 0 || p.get("a") == 1, "a must be 0 or 1"); },
      [](const GridConfig& g) {
        return product_grid(product_grid(range_grid("j", -3, 3), range_grid("a", 0, 1)), {Params{{"N", g.N}}});
      }));

  out.push_back(series_case("distinct_parts_gf", "partitions into distinct parts",
                            {side("sum", [](const Params& p) { return classical::distinct_parts_sum(p.get("N")); }),
                             side("product", [](const Params& p) { return classical::distinct_parts_product(p.get("N")); }),
                             side("count", [](const Params& p) { return count_gf(part::is_distinct, p.get("N")); })}));
  out.push_back(series_case(
      "partition_gf", "all partitions",
      {side("count", [](const Params& p) { return count_gf({}, p.get("N")); }),
       side("product", [](const Params& p) { return inverse_pochhammer(PochSpec::infinite(1, 1), p.get("N")); })}));
  for (int m = 1; m <= 2; ++m)
    out.push_back(series_case(
        "capparelli_gf_" + std::to_string(m), "C_m and D_m partition counts against the analytic product",
        {side("count_C",
              [m](const Params& p) {
                return part::gf_from_counts([m](long n) { return part::count_C(m, n); }, p.get("N"));
              }),
         side("count_D",
              [m](const Params& p) {
                return part::gf_from_counts([m](long n) { return part::count_D(m, n); }, p.get("N"));
              }),
         side("product", [m](const Params& p) { return cap::analytic_rhs(m, p.get("N")); })}));
}

}  // namespace qcap::reg
