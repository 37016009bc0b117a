#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcap/qcombinat.hpp"
#include "qcap/qseries.hpp"

namespace qcap::bailey {

/// alpha_j = weight(j) * q^(quad j^2 + lin j), used against binomials [2L+a, L-j]
/// in base q^base.
struct BaileyAlpha {
  std::string name;
  long base = 1;
  int a = 0;
  long quad = 0;
  long lin = 0;
  /// Exact j-dependent factor; its lowest exponent is at least -slope*|j|.
  std::function<QSeries(long)> weight;
  long slope = 0;
  /// Explicit support for alphas without a quadratic exponent.
  std::optional<IndexRange> finite_support;

  QSeries operator()(long j) const;
  /// Indices j whose alpha_j can contribute at or below q^N.
  IndexRange support(long N) const;
};

/// alpha_j = chi(j+1) q^(quad j^2 + lin j).
BaileyAlpha jacobi_alpha(std::string name, long quad, long lin, int a = 0, long base = 1);
/// alpha_j = q^(quad j^2 + lin j) with unit weight.
BaileyAlpha theta_alpha(std::string name, long quad, long lin, int a = 0, long base = 1);
/// alpha_0 = 1, all others 0.
BaileyAlpha unit_alpha(int a = 0, long base = 1);

/// Every alpha used by the hierarchies, each at its natural a and base.
std::vector<BaileyAlpha> catalog();
/// The same alpha evaluated with another a and base.
BaileyAlpha rebased(BaileyAlpha alpha, int a, long base);

/// F(L) = sum_j alpha_j [2L+a, L-j].
QSeries bailey_F(const BaileyAlpha& alpha, long L);
/// alpha_j -> alpha_j q^(base (j^2 + a j)).
BaileyAlpha bailey_step(BaileyAlpha alpha);
/// q^L F(L) rewritten with the k-transform: needs alpha = chi(j+1) q^(k j^2 - (k-1) j)
/// and gives chi(j+1) q^(k j^2 - k j).
BaileyAlpha twist(BaileyAlpha alpha);

using Sequence = std::function<QSeries(long)>;

/// L -> sum_r q^(b(r^2+ar)) (q^b;q^b)_(2L+a) / ((q^b;q^b)_(L-r) (q^b;q^b)_(2r+a)) G(r).
Sequence bailey_lhs_transform(Sequence G, int a, long base);

struct BaileyCheck {
  bool pass = true;
  long first_failure = -1;
};
/// transform(F_alpha)(L) == F_step(alpha)(L) for 0 <= L <= L_max.
BaileyCheck verify_bailey_theorem(const BaileyAlpha& alpha, long L_max);

}  // namespace qcap::bailey
