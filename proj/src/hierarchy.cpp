#include "qcap/hierarchy.hpp"

#include <array>
#include <map>

#include "enumerate.hpp"
#include "qcap/capparelli.hpp"
#include "qcap/qcombinat.hpp"

namespace qcap::hier {

namespace {

const std::vector<FamilyInfo>& table() {
  static const std::vector<FamilyInfo> t{
      {Family::Cap1Binomial, "fin_cap1_binomial", 3, 0},
      {Family::Cap2Binomial, "fin_cap2_binomial", 3, 1},
      {Family::SumCapparelli, "fin_sum_of_capparellis", 3, 0},
      {Family::Cap1, "fin_cap1", 1, 0},
      {Family::Cap2, "fin_cap2", 1, 0},
      {Family::Cap2Analogue, "fin_cap2_analogue", 1, 1},
      {Family::Double, "double_fin", 1, 0},
  };
  return t;
}

// Exponent of the twisted steps: sum of N_k over the s innermost indices.
long twist_exponent(const std::vector<long>& N, long s) {
  long e = 0;
  const long f = static_cast<long>(N.size());
  for (long k = f - s; k < f; ++k) e += N[static_cast<std::size_t>(k)];
  return e;
}

long square_sum(const std::vector<long>& N) {
  long e = 0;
  for (long x : N) e += x * x;
  return e;
}

long plain_sum(const std::vector<long>& N) {
  long e = 0;
  for (long x : N) e += x;
  return e;
}

QSeries product(std::initializer_list<PochSpec> numer, std::initializer_list<PochSpec> denom,
                long N) {
  return infinite_product(std::span<const PochSpec>(numer.begin(), numer.size()),
                          std::span<const PochSpec>(denom.begin(), denom.size()), N);
}

}  // namespace

const FamilyInfo& info(Family family) {
  for (const auto& i : table())
    if (i.family == family) return i;
  throw Error("unknown family");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& i : table()) v.push_back(i.family);
    return v;
  }();
  return all;
}

std::optional<Family> family_from_id(std::string_view id) {
  for (const auto& i : table())
    if (id == i.id) return i.family;
  return std::nullopt;
}

void validate(const HierarchySpec& spec) {
  if (spec.f < 1) throw ParamOutOfRange("f must be at least 1");
  if (spec.family == Family::Double) {
    if (spec.s < 0 || spec.s > spec.f) throw ParamOutOfRange("s must satisfy 0 <= s <= f");
  } else if (spec.s != 0) {
    throw ParamOutOfRange("s applies to the double hierarchy only");
  }
}

QSeries seed_lhs(Family family, long M) {
  switch (family) {
    case Family::Cap1Binomial:
      return cap::binomial_lhs(1, M);
    case Family::Cap2Binomial:
      return cap::binomial_lhs(2, M);
    case Family::SumCapparelli:
      return cap::binomial_lhs(3, M);
    case Family::Cap1:
    case Family::Double:
      return cap::fin_cap_lhs(1, M);
    case Family::Cap2:
    case Family::Cap2Analogue:
      return cap::fin_cap_lhs(2, M);
  }
  throw Error("unknown family");
}

bailey::BaileyAlpha seed_alpha(Family family) {
  using namespace bailey;
  switch (family) {
    case Family::Cap1Binomial:
      return theta_alpha("fin_cap_binomial_1", 3, 1, 0, 3);
    case Family::Cap2Binomial:
      return theta_alpha("fin_cap_binomial_2", 3, 2, 1, 3);
    case Family::SumCapparelli: {
      BaileyAlpha al = theta_alpha("fin_cap_binomial_3", 3, -2, 0, 3);
      al.weight = [](long j) { return QSeries::one() + QSeries::monomial(3 * j); };
      al.slope = 3;
      return al;
    }
    case Family::Cap1:
    case Family::Double:
      return jacobi_alpha("fin_cap_1", 1, 0);
    case Family::Cap2:
      return jacobi_alpha("fin_cap_2", 1, 1);
    case Family::Cap2Analogue:
      return jacobi_alpha("fin_cap2_alt", 1, 1, 1);
  }
  throw Error("unknown family");
}

QSeries multisum_lhs(const HierarchySpec& spec, long L) {
  validate(spec);
  if (L < 0) throw ParamOutOfRange("L must be non-negative");
  const auto& fi = info(spec.family);
  const long b = fi.base, a = fi.a;
  std::map<long, QSeries> seeds;
  Accumulator acc;
  detail::for_each_tail_composition(
      spec.f, [&](long Nk, long, long) { return Nk <= L; },
      [&](const std::vector<long>& n, const std::vector<long>& N) {
        const long nf = n.back();
        auto it = seeds.find(nf);
        if (it == seeds.end()) it = seeds.emplace(nf, seed_lhs(spec.family, nf)).first;
        if (it->second.is_zero()) return;
        std::vector<PochPart> parts{PochPart{L - N[0], b, {}}};
        for (std::size_t k = 0; k + 1 < n.size(); ++k) parts.push_back(PochPart{n[k], b, {}});
        parts.push_back(PochPart{2 * nf + a, b, {}});
        const QSeries kernel = q_multinomial(PochPart{2 * L + a, b, {}}, parts);
        const long e = b * (square_sum(N) + a * plain_sum(N)) + twist_exponent(N, spec.s);
        acc.add(kernel * it->second, e);
      });
  return acc.result();
}

QSeries generate_hierarchy_lhs(const HierarchySpec& spec, long L) {
  validate(spec);
  if (L < 0) throw ParamOutOfRange("L must be non-negative");
  const auto& fi = info(spec.family);
  std::vector<QSeries> G(static_cast<std::size_t>(L + 1));
  for (long r = 0; r <= L; ++r) G[static_cast<std::size_t>(r)] = seed_lhs(spec.family, r);
  for (long step = 1; step <= spec.f; ++step) {
    std::vector<QSeries> prev = std::move(G);
    if (step <= spec.s)
      for (long r = 0; r <= L; ++r) prev[static_cast<std::size_t>(r)] = shift(prev[static_cast<std::size_t>(r)], r);
    const bailey::Sequence seq = [&prev](long r) { return prev[static_cast<std::size_t>(r)]; };
    const bailey::Sequence next = bailey::bailey_lhs_transform(seq, fi.a, fi.base);
    G.assign(static_cast<std::size_t>(L + 1), QSeries());
    for (long r = 0; r <= L; ++r) G[static_cast<std::size_t>(r)] = next(r);
  }
  return G[static_cast<std::size_t>(L)];
}

bailey::BaileyAlpha generated_alpha(const HierarchySpec& spec) {
  validate(spec);
  bailey::BaileyAlpha al = seed_alpha(spec.family);
  for (long step = 1; step <= spec.f; ++step) {
    if (step <= spec.s) al = bailey::twist(al);
    al = bailey::bailey_step(al);
  }
  return al;
}

QSeries rhs(const HierarchySpec& spec, long L) {
  validate(spec);
  if (L < 0) throw ParamOutOfRange("L must be non-negative");
  const long f = spec.f, F = spec.f + 1;
  Accumulator acc;
  switch (spec.family) {
    case Family::Cap1Binomial:
      for (long j = -L; j <= L; ++j) acc.add(q_binomial(2 * L, L - j, 3), 3 * F * j * j + j);
      break;
    case Family::Cap2Binomial:
      for (long j = -L - 1; j <= L + 1; ++j)
        acc.add(q_binomial(2 * L + 1, L - j, 3), 3 * F * j * j + (3 * f + 2) * j);
      break;
    case Family::SumCapparelli:
      for (long j = -L - 1; j <= L + 1; ++j)
        acc.add(q_binomial(2 * L, L - j, 3) * (QSeries::one() + QSeries::monomial(3 * j)),
                3 * F * j * j - 2 * j);
      break;
    case Family::Cap1:
      return cap::jacobi_binomial_sum(L, F, 0, -L, L);
    case Family::Cap2:
      return cap::jacobi_binomial_sum(L, F, 1, -L, L);
    case Family::Cap2Analogue:
      return cap::jacobi_binomial_sum(L, F, F, -L - 1, L + 1, 1);
    case Family::Double:
      return cap::jacobi_binomial_sum(L, F, -spec.s, -L, L);
  }
  return acc.result();
}

QSeries limit_lhs(const HierarchySpec& spec, long N) {
  validate(spec);
  if (N < 0) throw ParamOutOfRange("N must be non-negative");
  const auto& fi = info(spec.family);
  const long b = fi.base, a = fi.a;
  std::map<long, QSeries> seeds;
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  detail::for_each_tail_composition(
      spec.f, [&](long, long sum, long sumsq) { return b * (sumsq + a * sum) <= N; },
      [&](const std::vector<long>& n, const std::vector<long>& Nk) {
        const long e = b * (square_sum(Nk) + a * plain_sum(Nk)) + twist_exponent(Nk, spec.s);
        if (e > N) return;
        const long nf = n.back();
        auto it = seeds.find(nf);
        if (it == seeds.end()) it = seeds.emplace(nf, seed_lhs(spec.family, nf)).first;
        if (it->second.is_zero()) return;
        const long order = N - e;
        QSeries den = inverse_pochhammer(PochSpec::factorial(2 * nf + a, b), order);
        for (std::size_t k = 0; k + 1 < n.size(); ++k)
          den = den * inverse_pochhammer(PochSpec::factorial(n[k], b), order);
        acc.add(truncate(it->second, order) * den, e);
      });
  return acc.result();
}

QSeries limit_rhs(const HierarchySpec& spec, long N) {
  validate(spec);
  if (N < 0) throw ParamOutOfRange("N must be non-negative");
  const long f = spec.f, F = spec.f + 1, s = spec.s;
  using P = PochSpec;
  switch (spec.family) {
    case Family::Cap1Binomial:
      return product({P::infinite(6 * F, 6 * F), P::infinite(3 * f + 2, 6 * F, -1),
                      P::infinite(3 * f + 4, 6 * F, -1)},
                     {P::infinite(3, 3)}, N);
    case Family::Cap2Binomial:
      return product({P::infinite(6 * F, 6 * F), P::infinite(1, 6 * F, -1),
                      P::infinite(6 * f + 5, 6 * F, -1)},
                     {P::infinite(3, 3)}, N);
    case Family::SumCapparelli: {
      const QSeries common = product({P::infinite(6 * F, 6 * F)}, {P::infinite(3, 3)}, N);
      const QSeries first =
          product({P::infinite(3 * f + 1, 6 * F, -1), P::infinite(3 * f + 5, 6 * F, -1)}, {}, N);
      const QSeries second =
          product({P::infinite(3 * f + 2, 6 * F, -1), P::infinite(3 * f + 4, 6 * F, -1)}, {}, N);
      return truncate(common * (first + second), N);
    }
    case Family::Cap1:
      return product({P::infinite(F, F), P::infinite(3 * F, 3 * F, -1), P::infinite(2 * F, 6 * F, -1),
                      P::infinite(4 * F, 6 * F, -1)},
                     {P::infinite(1, 1)}, N);
    case Family::Cap2:
      return product({P::infinite(f + 2, 6 * F), P::infinite(5 * f + 4, 6 * F), P::infinite(6 * F, 6 * F),
                      P::infinite(4 * f + 2, 12 * F), P::infinite(8 * f + 10, 12 * F)},
                     {P::infinite(1, 1)}, N);
    case Family::Cap2Analogue:
      return product({P::infinite(2 * F, 2 * F), P::infinite(2 * F, 12 * F), P::infinite(10 * F, 12 * F)},
                     {P::infinite(1, 1)}, N);
    case Family::Double:
      return product({P::infinite(F - s, 6 * F), P::infinite(5 * f + 5 + s, 6 * F),
                      P::infinite(6 * F, 6 * F), P::infinite(4 * f + 4 + 2 * s, 12 * F),
                      P::infinite(8 * f + 8 - 2 * s, 12 * F)},
                     {P::infinite(1, 1)}, N);
  }
  throw Error("unknown family");
}

QSeries cap2_corollary_product(long N) {
  return product({PochSpec::infinite(3, 3)}, {PochSpec::infinite(1, 1)}, N);
}

QSeries first_application_lhs(long L) {
  if (L < 0) throw ParamOutOfRange("L must be non-negative");
  Accumulator acc;
  for (long n1 = 0; n1 <= L; ++n1) {
    for (long n = 0; 3 * n <= n1; ++n) {
      for (long m = 0; 3 * n + 2 * m <= n1; ++m) {
        const std::array<PochPart, 2> numer{PochPart{n1, 1, {}}, PochPart{2 * L, 1, {}}};
        const std::array<PochPart, 5> denom{PochPart{m, 1, {}}, PochPart{n, 3, {}},
                                            PochPart{n1 - 3 * n - 2 * m, 1, {}},
                                            PochPart{L - n1, 1, {}}, PochPart{2 * n1, 1, {}}};
        acc.add(q_multinomial(numer, denom), 2 * m * m + 6 * m * n + 6 * n * n + n1 * n1 + n1);
      }
    }
  }
  return acc.result();
}

QSeries first_application_rhs(long L) { return cap::jacobi_binomial_sum(L, 2, -1, -L, L); }

QSeries after_k_transform_lhs(long L) { return shift(first_application_lhs(L), L); }

QSeries after_k_transform_rhs(long L) { return cap::jacobi_binomial_sum(L, 2, -2, -L, L); }

long corollary_depth(long nu) {
  if (nu < 1) throw ParamOutOfRange("nu must be at least 1");
  return nu * (nu + 3) / 2;
}

}  // namespace qcap::hier
