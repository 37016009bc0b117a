#pragma once

#include <variant>

#include "qcap/qseries.hpp"

namespace qcap::classical {

// Jacobi triple product with base q^k and z = sign * q^t:
//   sum_j z^j q^(k j^2) = (-z q^k, -q^k/z, q^(2k); q^(2k))_inf.
QSeries jtp_sum(long z_shift, long base, long N, int z_sign = 1);
QSeries jtp_product(long z_shift, long base, long N, int z_sign = 1);

// Quintuple product with base q^k and z = q^t:
//   sum_j (-1)^j q^(k j(3j-1)/2) z^(3j) (1 + z q^(kj))
//     = (q^k, -z, -q^k/z; q^k)_inf (q^k z^2, q^k/z^2; q^(2k))_inf.
QSeries quintuple_sum(long z_shift, long base, long N);
QSeries quintuple_product(long z_shift, long base, long N);

/// The a = 0 specialization of the q-binomial theorem.
struct ZeroA {};
/// a = q^shift, or a = 0.
using AParam = std::variant<long, ZeroA>;

struct BinomialTheoremReport {
  QSeries lhs;
  QSeries rhs;
  Comparison verdict;
};

// sum_n (a;q)_n / (q;q)_n z^n = (az;q)_inf / (z;q)_inf with z = q^z_shift, z_shift >= 1.
QSeries q_binomial_theorem_lhs(AParam a, long z_shift, long N);
QSeries q_binomial_theorem_rhs(AParam a, long z_shift, long N);
BinomialTheoremReport q_binomial_theorem_check(AParam a, long z_shift, long N);

/// L -> infinity proxy for [L, j] against 1/(q;q)_j at order N: N + j + 1.
long binomial_limit_threshold(long j, long N);
/// L -> infinity proxy for [2L+a, L-j] against 1/(q;q)_inf at order N: N + |j| + 1.
long central_limit_threshold(long j, long N);

// Truncated [L, j] and 1/(q;q)_j; [2L+a, L-j] and 1/(q;q)_inf.
QSeries binomial_limit_lhs(long L, long j, long N);
QSeries binomial_limit_rhs(long j, long N);
QSeries central_limit_lhs(long L, long j, long a, long N);
QSeries central_limit_rhs(long N);

/// sum_n q^(n(n+1)/2) / (q;q)_n and (-q;q)_inf, both to order N.
QSeries distinct_parts_sum(long N);
QSeries distinct_parts_product(long N);

}  // namespace qcap::classical
