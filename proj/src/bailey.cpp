#include "qcap/bailey.hpp"

#include <array>
#include <cstdlib>

namespace qcap::bailey {

QSeries BaileyAlpha::operator()(long j) const {
  const QSeries w = weight ? weight(j) : QSeries::one();
  return shift(w, quad * j * j + lin * j);
}

IndexRange BaileyAlpha::support(long N) const {
  if (finite_support) return *finite_support;
  if (quad <= 0) throw Error("alpha " + name + " has no quadratic exponent and no finite support");
  const IndexRange lo = quadratic_index_range(quad, lin - slope, 0, N);
  const IndexRange hi = quadratic_index_range(quad, lin + slope, 0, N);
  if (lo.empty()) return hi;
  if (hi.empty()) return lo;
  return {std::min(lo.lo, hi.lo), std::max(lo.hi, hi.hi)};
}

BaileyAlpha jacobi_alpha(std::string name, long quad, long lin, int a, long base) {
  BaileyAlpha al;
  al.name = std::move(name);
  al.quad = quad;
  al.lin = lin;
  al.a = a;
  al.base = base;
  al.weight = [](long j) { return QSeries::constant(jacobi3(j + 1)); };
  return al;
}

BaileyAlpha theta_alpha(std::string name, long quad, long lin, int a, long base) {
  BaileyAlpha al;
  al.name = std::move(name);
  al.quad = quad;
  al.lin = lin;
  al.a = a;
  al.base = base;
  return al;
}

BaileyAlpha unit_alpha(int a, long base) {
  BaileyAlpha al;
  al.name = "unit";
  al.a = a;
  al.base = base;
  al.weight = [](long j) { return j == 0 ? QSeries::one() : QSeries(); };
  al.finite_support = IndexRange{0, 0};
  return al;
}

std::vector<BaileyAlpha> catalog() {
  std::vector<BaileyAlpha> out;
  out.push_back(unit_alpha());
  out.push_back(jacobi_alpha("fin_cap_1", 1, 0));
  out.push_back(jacobi_alpha("fin_cap_2", 1, 1));
  out.push_back(jacobi_alpha("fin_cap2_alt", 1, 1, 1));
  out.push_back(jacobi_alpha("fin_cap1_qbin_alt", 1, -1));
  out.push_back(theta_alpha("fin_cap_binomial_1", 3, 1, 0, 3));
  out.push_back(theta_alpha("fin_cap_binomial_2", 3, 2, 1, 3));
  BaileyAlpha sum = theta_alpha("fin_cap_binomial_3", 3, -2, 0, 3);
  sum.weight = [](long j) { return QSeries::one() + QSeries::monomial(3 * j); };
  sum.slope = 3;
  out.push_back(sum);
  return out;
}

BaileyAlpha rebased(BaileyAlpha alpha, int a, long base) {
  alpha.a = a;
  alpha.base = base;
  return alpha;
}

QSeries bailey_F(const BaileyAlpha& alpha, long L) {
  if (L < 0) throw ParamOutOfRange("L must be non-negative");
  Accumulator acc;
  for (long j = -L - alpha.a; j <= L + alpha.a; ++j) {
    const QSeries& b = q_binomial(2 * L + alpha.a, L - j, alpha.base);
    if (b.is_zero()) continue;
    const QSeries aj = alpha(j);
    if (!aj.is_zero()) acc.add(aj * b);
  }
  return acc.result();
}

BaileyAlpha bailey_step(BaileyAlpha alpha) {
  alpha.quad += alpha.base;
  alpha.lin += alpha.base * alpha.a;
  alpha.name += "+step";
  return alpha;
}

BaileyAlpha twist(BaileyAlpha alpha) {
  if (alpha.base != 1 || alpha.a != 0 || alpha.lin != -(alpha.quad - 1) || alpha.quad < 1)
    throw ParamOutOfRange("twist needs chi(j+1) q^(k j^2 - (k-1) j) with a = 0 in base q");
  alpha.lin = -alpha.quad;
  alpha.name += "+twist";
  return alpha;
}

Sequence bailey_lhs_transform(Sequence G, int a, long base) {
  return [G = std::move(G), a, base](long L) {
    if (L < 0) throw ParamOutOfRange("L must be non-negative");
    Accumulator acc;
    for (long r = 0; r <= L; ++r) {
      const QSeries g = G(r);
      if (g.is_zero()) continue;
      const PochPart top{2 * L + a, base, {}};
      const std::array<PochPart, 2> parts{PochPart{L - r, base, {}}, PochPart{2 * r + a, base, {}}};
      acc.add(q_multinomial(top, parts) * g, base * (r * r + a * r));
    }
    return acc.result();
  };
}

BaileyCheck verify_bailey_theorem(const BaileyAlpha& alpha, long L_max) {
  const Sequence F = [alpha](long L) { return bailey_F(alpha, L); };
  const Sequence lhs = bailey_lhs_transform(F, alpha.a, alpha.base);
  const BaileyAlpha stepped = bailey_step(alpha);
  BaileyCheck out;
  for (long L = 0; L <= L_max; ++L) {
    if (lhs(L) != bailey_F(stepped, L)) {
      out.pass = false;
      out.first_failure = L;
      break;
    }
  }
  return out;
}

}  // namespace qcap::bailey
