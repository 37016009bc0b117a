#pragma once

#include "qcap/qseries.hpp"

// Evaluators for the individual sides of the Capparelli-type identities.
// Every left side is a direct expansion of its multi-sum; right sides
// are evaluated from their own formulas so the two never share work beyond
// qcombinat primitives.
namespace qcap::cap {

/// sum_{j=lo}^{hi} chi(j+1) q^(quad j^2 + lin j) [2L+a, L-j] in base q^base.
QSeries jacobi_binomial_sum(long L, long quad, long lin, long lo, long hi, long a = 0,
                            long base = 1);

// Analytic Capparelli identities, truncated at N.
QSeries analytic_lhs(int which, long N);
QSeries analytic_rhs(int which, long N);

// Finite forms with Gaussian binomials and Andrews-Baxter trinomials.
QSeries roundtri_lhs(int which, long L);
QSeries roundtri_rhs(int which, long L);

// Finite forms with base-q^3 binomials; which = 3 is the sum of both.
QSeries binomial_lhs(int which, long M);
QSeries binomial_rhs(int which, long M);

// New finite Capparelli identities (multinomial left sides).
QSeries fin_cap_lhs(int which, long L);
/// The two double sums of the second left side separately (part 1 or 2).
QSeries fin_cap2_part(int part, long L);
QSeries fin_cap_rhs(int which, long L);

/// 3k-split rewrite of the fin_cap right side.
QSeries rhs_split(int which, long L);
/// Rational-factor rewrite with the delta correction. uncorrected = true uses
/// the exponent q^(3j(3j-1)) for which = 2, which does not hold.
QSeries rhs_rational(int which, long L, bool uncorrected = false);

/// Right side of the second identity rewritten with [2L+1, L-j] over j in -L-1..L+1.
QSeries fin_cap2_rhs_alt(long L);
/// sum_j chi(j) q^(j^2) [2L, L-j], which vanishes identically.
QSeries antisymmetric_sum(long L);

// k-transform: sum chi(j+1) q^(k j(j-1)) [2L, L-j] = q^L sum chi(j+1) q^(k j^2 - (k-1) j) [2L, L-j].
QSeries k_transform_lhs(long k, long L);
QSeries k_transform_rhs(long k, long L);

// q^L times the first new identity: sum chi(j+1) q^(j(j-1)) [2L, L-j].
QSeries cor12_lhs(long L);
QSeries cor12_rhs(long L);

// Seed identity in L and M.
QSeries seed_lhs(long L, long M);
QSeries seed_rhs(long L, long M);

// nu-hierarchy of the seed identity and its double limit.
QSeries s_hierarchy_lhs(long nu, long L, long M);
QSeries s_hierarchy_rhs(long nu, long L, long M);
QSeries s_hierarchy_limit_lhs(long nu, long N);
QSeries s_hierarchy_limit_rhs(long nu, long N);

// Dual identities (q -> 1/q).
QSeries dual_lhs(int which, long L);
QSeries dual_rhs(int which, long L);
/// q^(L^2) or q^(L^2+L) times the q -> 1/q image of fin_cap_lhs(which, L).
QSeries dual_construction(int which, long L);

// Limits of the dual identities, b in {0, 1, 2}, truncated at N.
/// sum_k chi(k+b) q^k / (q;q)_k.
QSeries dual_limit_sum(int b, long N);
/// (q;q)_inf/(q^3;q^3)_inf sum_m (-1)^(m+1) chi(m-b) q^(m(m+1)/2) / (q;q)_m.
QSeries dual_limit_unified(int b, long N);
/// The single-residue form of each limit.
QSeries dual_limit_corollary(int b, long N);

}  // namespace qcap::cap
