#include <vector>

#include "enumerate.hpp"
#include "qcap/capparelli.hpp"
#include "qcap/qcombinat.hpp"

namespace qcap::cap {

namespace {

void check_nonneg(long v, const char* name) {
  if (v < 0) throw ParamOutOfRange(std::string(name) + " must be non-negative");
}

long binom2(long n) { return n * (n - 1) / 2; }

// Multiplies acc_term by the product of factors, stopping at the first zero.
bool times(QSeries& t, const QSeries& f) {
  if (f.is_zero()) return false;
  t = t * f;
  return true;
}

}  // namespace

QSeries seed_lhs(long L, long M) {
  check_nonneg(L, "L");
  check_nonneg(M, "M");
  Accumulator acc;
  for (long i = 0; i <= L; ++i) {
    for (long m = i % 2; m <= std::min(i, 3 * (L - i)); m += 2) {
      QSeries t = q_binomial(L + M - i, L, 3);
      if (!times(t, q_binomial(3 * (L - i), m))) continue;
      if (!times(t, q_binomial(2 * (L - i) + (i - m) / 2, 2 * (L - i), 3))) continue;
      acc.add(t, (m * m + 3 * i * i) / 2);
    }
  }
  return acc.result();
}

QSeries seed_rhs(long L, long M) {
  check_nonneg(L, "L");
  check_nonneg(M, "M");
  Accumulator acc;
  for (long j = -(L + M) - 2; j <= L + M + 2; ++j)
    acc.add(warnaar_S(L, M, 2 * j, j, 3), 3 * j * j + j);
  return acc.result();
}

namespace {

// Summand of the nu-hierarchy after the [L+M-i, L] factor, or zero. n, N are
// the tail-composition indices n_1..n_nu and their partial sums.
QSeries s_summand_core(const std::vector<long>& n, const std::vector<long>& N, long i, long m) {
  const long nu = static_cast<long>(n.size());
  long sumN = 0;
  for (long x : N) sumN += x;
  const long nv = n.back();
  const long half2 = i - m - sumN;
  if (half2 % 2 != 0) return QSeries();
  QSeries t = q_binomial(3 * nv, m);
  if (!times(t, q_binomial(2 * nv + half2 / 2, 2 * nv, 3))) return QSeries();
  long prefix = 0;
  for (long jj = 0; jj + 1 < nu; ++jj) {
    prefix += N[static_cast<std::size_t>(jj)];
    const long nj = n[static_cast<std::size_t>(jj)];
    if (!times(t, q_binomial(i - prefix + nj, nj, 3))) return QSeries();
  }
  return t;
}

long s_exponent2(const std::vector<long>& N, long i, long m) {
  long e = m * m + 3 * i * i;
  for (long x : N) e += 3 * x * x;
  return e;
}

}  // namespace

QSeries s_hierarchy_lhs(long nu, long L, long M) {
  if (nu < 1) throw ParamOutOfRange("nu must be at least 1");
  check_nonneg(L, "L");
  check_nonneg(M, "M");
  Accumulator acc;
  detail::for_each_tail_composition(
      nu, [&](long Nk, long, long) { return Nk <= L; },
      [&](const std::vector<long>& n, const std::vector<long>& N) {
        for (long i = 0; i <= L - N[0]; ++i) {
          const QSeries head = q_binomial(L + M - i, L, 3) * q_binomial(L - N[0], i, 3);
          if (head.is_zero()) continue;
          for (long m = 0; m <= 3 * n.back(); ++m) {
            const QSeries core = s_summand_core(n, N, i, m);
            if (core.is_zero()) continue;
            acc.add(head * core, s_exponent2(N, i, m) / 2);
          }
        }
      });
  return acc.result();
}

QSeries s_hierarchy_rhs(long nu, long L, long M) {
  if (nu < 1) throw ParamOutOfRange("nu must be at least 1");
  check_nonneg(L, "L");
  check_nonneg(M, "M");
  const long c = binom2(nu + 2);
  Accumulator acc;
  for (long j = -(L + M) - 2; j <= L + M + 2; ++j)
    acc.add(warnaar_S(L, M, (nu + 2) * j, (nu + 1) * j, 3), 3 * c * j * j + j);
  return acc.result();
}

QSeries s_hierarchy_limit_lhs(long nu, long N) {
  if (nu < 1) throw ParamOutOfRange("nu must be at least 1");
  check_nonneg(N, "N");
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  detail::for_each_tail_composition(
      nu, [&](long, long, long sumsq) { return 3 * sumsq <= 2 * N; },
      [&](const std::vector<long>& n, const std::vector<long>& N_) {
        long base2 = 0;
        for (long x : N_) base2 += 3 * x * x;
        for (long i = 0; base2 + 3 * i * i <= 2 * N; ++i) {
          for (long m = 0; m <= 3 * n.back(); ++m) {
            const long e2 = s_exponent2(N_, i, m);
            if (e2 > 2 * N) break;
            const QSeries core = s_summand_core(n, N_, i, m);
            if (core.is_zero()) continue;
            const long e = e2 / 2;
            acc.add(core * inverse_pochhammer(PochSpec::factorial(i, 3), N - e), e);
          }
        }
      });
  return acc.result();
}

QSeries s_hierarchy_limit_rhs(long nu, long N) {
  if (nu < 1) throw ParamOutOfRange("nu must be at least 1");
  check_nonneg(N, "N");
  const long c = binom2(nu + 2);
  const PochSpec numer[] = {PochSpec::infinite(6 * c, 6 * c), PochSpec::infinite(3 * c + 1, 6 * c, -1),
                            PochSpec::infinite(3 * c - 1, 6 * c, -1)};
  const PochSpec denom[] = {PochSpec::infinite(3, 3)};
  return infinite_product(numer, denom, N);
}

}  // namespace qcap::cap
