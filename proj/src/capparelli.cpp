#include "qcap/capparelli.hpp"

#include <array>

#include "qcap/qcombinat.hpp"

namespace qcap::cap {

namespace {

void check_which(int which, int max) {
  if (which < 1 || which > max) throw ParamOutOfRange("which must be in 1.." + std::to_string(max));
}

void check_nonneg(long v, const char* name) {
  if (v < 0) throw ParamOutOfRange(std::string(name) + " must be non-negative");
}

// (q;q)_top / ((q;q)_r (q;q)_m (q^3;q^3)_n), zero when r < 0.
QSeries cap_multinomial(long top, long r, long m, long n) {
  const std::array<PochPart, 3> parts{PochPart{r, 1, {}}, PochPart{m, 1, {}}, PochPart{n, 3, {}}};
  return q_multinomial(top, parts);
}

// (q^3;q^3)_M / ((q;q)_m (q^3;q^3)_n (q^3;q^3)_(M-2n-m)).
QSeries cap3_multinomial(long M, long m, long n) {
  const PochPart top{M, 3, {}};
  const std::array<PochPart, 3> parts{PochPart{m, 1, {}}, PochPart{n, 3, {}},
                                      PochPart{M - 2 * n - m, 3, {}}};
  return q_multinomial(top, parts);
}

long cap_exponent(long m, long n) { return 2 * m * m + 6 * m * n + 6 * n * n; }

QSeries one_plus(long e) { return QSeries::one() + QSeries::monomial(e); }

QSeries product(std::initializer_list<PochSpec> numer, std::initializer_list<PochSpec> denom,
                long N) {
  return infinite_product(std::span<const PochSpec>(numer.begin(), numer.size()),
                          std::span<const PochSpec>(denom.begin(), denom.size()), N);
}

}  // namespace

QSeries jacobi_binomial_sum(long L, long quad, long lin, long lo, long hi, long a, long base) {
  Accumulator acc;
  for (long j = lo; j <= hi; ++j) {
    const int c = jacobi3(j + 1);
    if (c == 0) continue;
    acc.add(q_binomial(2 * L + a, L - j, base), quad * j * j + lin * j, c);
  }
  return acc.result();
}

// ---- analytic identities

QSeries analytic_lhs(int which, long N) {
  check_which(which, 2);
  check_nonneg(N, "N");
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  const auto mr = quadratic_index_range(2, 0, 0, N);
  for (long m = 0; m <= mr.hi; ++m) {
    const auto nr = quadratic_index_range(6, 6 * m, 2 * m * m, N);
    for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n) {
      const long e = cap_exponent(m, n);
      std::array<long, 2> shifts{e, -1};
      if (which == 2) shifts = {e + m + 3 * n, e + 3 * m + 6 * n + 1};
      for (long s : shifts) {
        if (s < 0 || s > N) continue;
        const QSeries den = inverse_pochhammer(PochSpec::factorial(m, 1), N - s) *
                            inverse_pochhammer(PochSpec::factorial(n, 3), N - s);
        acc.add(den, s);
      }
    }
  }
  return truncate(acc.result(), N);
}

QSeries analytic_rhs(int which, long N) {
  check_which(which, 2);
  if (which == 1)
    return product({PochSpec::infinite(2, 6, -1), PochSpec::infinite(4, 6, -1),
                    PochSpec::infinite(3, 3, -1)},
                   {}, N);
  return product({PochSpec::infinite(1, 6, -1), PochSpec::infinite(5, 6, -1),
                  PochSpec::infinite(3, 3, -1)},
                 {}, N);
}

// ---- Gaussian / trinomial forms

QSeries roundtri_lhs(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  for (long n = 0; 2 * n <= L; ++n) {
    for (long m = 0; 2 * n + m <= L; ++m) {
      const long R = L - 2 * n - m;
      const long e = cap_exponent(m, n);
      if (which == 1) {
        acc.add(q_binomial(3 * R, m) * q_binomial(2 * R + n, n, 3), e);
      } else {
        acc.add(q_binomial(3 * R + 2, m) * q_binomial(2 * R + n + 1, n, 3), e + m + 3 * n);
        acc.add(q_binomial(3 * R, m) * q_binomial(2 * R + n, n, 3), e + 3 * m + 6 * n + 1);
      }
    }
  }
  return acc.result();
}

QSeries roundtri_rhs(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  for (long j = -L - 2; j <= L + 2; ++j) {
    if (which == 1)
      acc.add(q_trinomial_T(L, 2 * j, 2 * j, 3), 3 * j * j + j);
    else
      acc.add(q_trinomial_T(L + 1, 2 * j + 1, 2 * j + 1, 3), 3 * j * j + 2 * j);
  }
  return acc.result();
}

QSeries binomial_lhs(int which, long M) {
  check_which(which, 3);
  check_nonneg(M, "M");
  Accumulator acc;
  for (long n = 0; 2 * n <= M; ++n) {
    for (long m = 0; 2 * n + m <= M; ++m) {
      const QSeries t = cap3_multinomial(M, m, n);
      const long e = cap_exponent(m, n);
      if (which == 1) {
        acc.add(t, e);
      } else if (which == 2) {
        acc.add(t, e + m + 3 * n);
        acc.add(t, e + 3 * m + 6 * n + 1);
      } else {
        acc.add(t * one_plus(3 * M), e - 2 * m - 3 * n);
      }
    }
  }
  return acc.result();
}

QSeries binomial_rhs(int which, long M) {
  check_which(which, 3);
  check_nonneg(M, "M");
  Accumulator acc;
  if (which == 1) {
    for (long j = -M; j <= M; ++j) acc.add(q_binomial(2 * M, M - j, 3), 3 * j * j + j);
  } else if (which == 2) {
    for (long j = -M - 1; j <= M; ++j) acc.add(q_binomial(2 * M + 1, M - j, 3), 3 * j * j + 2 * j);
  } else {
    for (long j = -M; j <= M; ++j)
      acc.add(q_binomial(2 * M, M - j, 3) * one_plus(3 * j), 3 * j * j - 2 * j);
  }
  return acc.result();
}

// ---- new finite identities

QSeries fin_cap2_part(int part, long L) {
  check_which(part, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  for (long n = 0; 3 * n <= L; ++n) {
    for (long m = 0; 3 * n + 2 * m <= L; ++m) {
      const long e = cap_exponent(m, n);
      if (part == 1)
        acc.add(cap_multinomial(L, L - 3 * n - 2 * m, m, n), e + m + 3 * n);
      else
        acc.add(cap_multinomial(L, L - 3 * n - 2 * m - 1, m, n), e + 3 * m + 6 * n + 1);
    }
  }
  return acc.result();
}

QSeries fin_cap_lhs(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  if (which == 2) return fin_cap2_part(1, L) + fin_cap2_part(2, L);
  Accumulator acc;
  for (long n = 0; 3 * n <= L; ++n)
    for (long m = 0; 3 * n + 2 * m <= L; ++m)
      acc.add(cap_multinomial(L, L - 3 * n - 2 * m, m, n), cap_exponent(m, n));
  return acc.result();
}

QSeries fin_cap_rhs(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  return jacobi_binomial_sum(L, 1, which == 1 ? 0 : 1, -L, L);
}

QSeries rhs_split(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  const long K = L / 3 + 1;
  for (long k = -K; k <= K; ++k) {
    const long a = 3 * k, b = 3 * k + 1;
    if (which == 1) {
      acc.add(q_binomial(2 * L, L + a), a * a);
      acc.sub(q_binomial(2 * L, L + b), b * b);
    } else {
      acc.add(q_binomial(2 * L, L + a), a * (a + 1));
      acc.sub(q_binomial(2 * L, L + b), b * (b + 1));
    }
  }
  return acc.result();
}

QSeries rhs_rational(int which, long L, bool uncorrected) {
  check_which(which, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  const long K = L / 3;
  for (long j = -K; j <= K; ++j) {
    const long d = L + 3 * j + 1;
    QSeries num;
    long e;
    if (which == 1) {
      num = QSeries::one() - QSeries::monomial(6 * j + 1);
      e = 9 * j * j;
    } else {
      num = QSeries::one() - QSeries::monomial(6 * j + 2) -
            (QSeries::one() - QSeries::monomial(1)) * QSeries::monomial(d);
      e = uncorrected ? 3 * j * (3 * j - 1) : 3 * j * (3 * j + 1);
    }
    num = num * q_binomial(2 * L, L + 3 * j);
    acc.add(div_exact(num, QSeries::one() - QSeries::monomial(d)), e);
  }
  if (((L - 2) % 3 + 3) % 3 == 0) acc.add(QSeries::monomial(which == 1 ? L * L : L * (L - 1)), 0, -1);
  return acc.result();
}

QSeries fin_cap2_rhs_alt(long L) {
  check_nonneg(L, "L");
  return jacobi_binomial_sum(L, 1, 1, -L - 1, L + 1, 1);
}

QSeries antisymmetric_sum(long L) {
  check_nonneg(L, "L");
  Accumulator acc;
  for (long j = -L; j <= L; ++j) {
    const int c = jacobi3(j);
    if (c != 0) acc.add(q_binomial(2 * L, L - j), j * j, c);
  }
  return acc.result();
}

QSeries k_transform_lhs(long k, long L) {
  if (k < 1) throw ParamOutOfRange("k must be positive");
  check_nonneg(L, "L");
  return jacobi_binomial_sum(L, k, -k, -L, L);
}

QSeries k_transform_rhs(long k, long L) {
  if (k < 1) throw ParamOutOfRange("k must be positive");
  check_nonneg(L, "L");
  return shift(jacobi_binomial_sum(L, k, -(k - 1), -L, L), L);
}

QSeries cor12_lhs(long L) { return shift(fin_cap_lhs(1, L), L); }

QSeries cor12_rhs(long L) {
  check_nonneg(L, "L");
  return jacobi_binomial_sum(L, 1, -1, -L, L);
}

// ---- dual identities

QSeries dual_lhs(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  for (long n = 0; n <= L; ++n) {
    for (long m = 0; n + 2 * m <= L; ++m) {
      const long sign = m % 2 == 0 ? 1 : -1;
      const std::array<long, 2> lags{0, 1};
      for (long lag : lags) {
        if (which == 1 && lag == 1) continue;
        const long R = L - n - 2 * m - lag;
        if (R < 0 || R % 3 != 0) continue;
        const std::array<PochPart, 3> parts{PochPart{m, 1, {}}, PochPart{n, 1, {}},
                                            PochPart{R / 3, 3, {}}};
        const QSeries t = q_multinomial(L, parts);
        const long e = which == 1 ? m * (m - 1) / 2 + L * n : m * (m + 1) / 2 + (L + 1) * n;
        acc.add(t, e, lag == 0 ? sign : -sign);
      }
    }
  }
  return acc.result();
}

QSeries dual_rhs(int which, long L) {
  check_which(which, 2);
  check_nonneg(L, "L");
  Accumulator acc;
  for (long j = -L; j <= L; ++j) {
    const int c = jacobi3(j + 1);
    if (c != 0) acc.add(q_binomial(2 * L, L - j), which == 1 ? 0 : L - j, c);
  }
  return acc.result();
}

QSeries dual_construction(int which, long L) {
  return shift(invert_q(fin_cap_lhs(which, L)), which == 1 ? L * L : L * L + L);
}

// ---- dual limits

QSeries dual_limit_sum(int b, long N) {
  if (b < 0 || b > 2) throw ParamOutOfRange("b must be 0, 1 or 2");
  check_nonneg(N, "N");
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  for (long k = 0; k <= N; ++k) {
    const int c = jacobi3(k + b);
    if (c != 0) acc.add(inverse_pochhammer(PochSpec::factorial(k, 1), N - k), k, c);
  }
  return acc.result();
}

namespace {

QSeries euler_ratio(long N) {
  return product({PochSpec::infinite(1, 1)}, {PochSpec::infinite(3, 3)}, N);
}

}  // namespace

QSeries dual_limit_unified(int b, long N) {
  if (b < 0 || b > 2) throw ParamOutOfRange("b must be 0, 1 or 2");
  check_nonneg(N, "N");
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  for (long m = 0; m * (m + 1) / 2 <= N; ++m) {
    const int c = jacobi3(m - b) * (m % 2 == 0 ? -1 : 1);
    const long e = m * (m + 1) / 2;
    if (c != 0) acc.add(inverse_pochhammer(PochSpec::factorial(m, 1), N - e), e, c);
  }
  return truncate(euler_ratio(N) * acc.result(), N);
}

QSeries dual_limit_corollary(int b, long N) {
  if (b < 0 || b > 2) throw ParamOutOfRange("b must be 0, 1 or 2");
  check_nonneg(N, "N");
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  for (long m = 0;; ++m) {
    long e, d, c;
    if (b == 2) {
      e = 3 * m * (3 * m + 1) / 2, d = 3 * m + 1, c = m % 2 == 0 ? -1 : 1;
    } else if (b == 0) {
      e = (3 * m + 1) * (3 * m + 2) / 2, d = 3 * m + 2, c = m % 2 == 0 ? 1 : -1;
    } else {
      e = 3 * m * (3 * m - 1) / 2, d = 3 * m, c = m % 2 == 0 ? 1 : -1;
    }
    if (e > N) break;
    acc.add(inverse_pochhammer(PochSpec::factorial(d, 1), N - e), e, c);
  }
  return truncate(euler_ratio(N) * acc.result(), N);
}

}  // namespace qcap::cap
