#include "qcap/classical.hpp"

#include <cstdlib>

#include "qcap/qcombinat.hpp"

namespace qcap::classical {

namespace {

void check_base(long base) {
  if (base < 1) throw UnboundedBelow("base must be positive, otherwise the sum is unbounded below");
}

void check_order(long N) {
  if (N < 0) throw ParamOutOfRange("truncation order must be non-negative");
}

QSeries product(std::initializer_list<PochSpec> numer, std::initializer_list<PochSpec> denom,
                long N) {
  return infinite_product(std::span<const PochSpec>(numer.begin(), numer.size()),
                          std::span<const PochSpec>(denom.begin(), denom.size()), N);
}

}  // namespace

QSeries jtp_sum(long z_shift, long base, long N, int z_sign) {
  check_base(base);
  check_order(N);
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  const auto r = quadratic_index_range(base, z_shift, 0, N);
  for (long j = r.lo; j <= r.hi; ++j) {
    const long sign = (z_sign < 0 && j % 2 != 0) ? -1 : 1;
    acc.add(QSeries::monomial(base * j * j + z_shift * j, sign));
  }
  return acc.result();
}

QSeries jtp_product(long z_shift, long base, long N, int z_sign) {
  check_base(base);
  check_order(N);
  const int s = z_sign < 0 ? 1 : -1;
  return product({PochSpec::infinite(base + z_shift, 2 * base, s),
                  PochSpec::infinite(base - z_shift, 2 * base, s),
                  PochSpec::infinite(2 * base, 2 * base)},
                 {}, N);
}

QSeries quintuple_sum(long z_shift, long base, long N) {
  check_base(base);
  check_order(N);
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  // Twice the exponents: 3k j^2 + (6t - k) j and 3k j^2 + (6t + k) j + 2t.
  const auto r1 = quadratic_index_range(3 * base, 6 * z_shift - base, 0, 2 * N);
  const auto r2 = quadratic_index_range(3 * base, 6 * z_shift + base, 2 * z_shift, 2 * N);
  const long lo = std::min(r1.empty() ? 0 : r1.lo, r2.empty() ? 0 : r2.lo);
  const long hi = std::max(r1.empty() ? -1 : r1.hi, r2.empty() ? -1 : r2.hi);
  for (long j = lo; j <= hi; ++j) {
    const long sign = j % 2 == 0 ? 1 : -1;
    const long e = base * j * (3 * j - 1) / 2 + 3 * z_shift * j;
    acc.add(QSeries::monomial(e, sign));
    acc.add(QSeries::monomial(e + z_shift + base * j, sign));
  }
  return acc.result();
}

QSeries quintuple_product(long z_shift, long base, long N) {
  check_base(base);
  check_order(N);
  return product({PochSpec::infinite(base, base), PochSpec::infinite(z_shift, base, -1),
                  PochSpec::infinite(base - z_shift, base, -1),
                  PochSpec::infinite(base + 2 * z_shift, 2 * base),
                  PochSpec::infinite(base - 2 * z_shift, 2 * base)},
                 {}, N);
}

QSeries q_binomial_theorem_lhs(AParam a, long z_shift, long N) {
  if (z_shift < 1) throw ParamOutOfRange("z_shift must be at least 1");
  check_order(N);
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  // With a = q^s, s <= 0, the sum stops at n = -s but its terms may be Laurent.
  const long* s = std::get_if<long>(&a);
  const bool finite = s && *s <= 0;
  for (long n = 0; finite || n * z_shift <= N; ++n) {
    QSeries numer = QSeries::one();
    if (s) {
      numer = pochhammer(PochSpec::finite(*s, 1, n));
      if (numer.is_zero()) break;
    }
    const long low = std::min(0L, numer.min_exponent());
    const long order = N - n * z_shift - low;
    if (order < 0) continue;
    acc.add(numer * inverse_pochhammer(PochSpec::factorial(n, 1), order), n * z_shift);
  }
  return truncate(acc.result(), N);
}

QSeries q_binomial_theorem_rhs(AParam a, long z_shift, long N) {
  if (z_shift < 1) throw ParamOutOfRange("z_shift must be at least 1");
  check_order(N);
  if (const long* s = std::get_if<long>(&a))
    return product({PochSpec::infinite(*s + z_shift, 1)}, {PochSpec::infinite(z_shift, 1)}, N);
  return product({}, {PochSpec::infinite(z_shift, 1)}, N);
}

BinomialTheoremReport q_binomial_theorem_check(AParam a, long z_shift, long N) {
  BinomialTheoremReport r;
  r.lhs = q_binomial_theorem_lhs(a, z_shift, N);
  r.rhs = q_binomial_theorem_rhs(a, z_shift, N);
  r.verdict = compare(r.lhs, r.rhs);
  return r;
}

long binomial_limit_threshold(long j, long N) { return N + j + 1; }

long central_limit_threshold(long j, long N) { return N + std::labs(j) + 1; }

QSeries binomial_limit_lhs(long L, long j, long N) { return truncate(q_binomial(L, j), N); }

QSeries binomial_limit_rhs(long j, long N) {
  return inverse_pochhammer(PochSpec::factorial(j, 1), N);
}

QSeries central_limit_lhs(long L, long j, long a, long N) {
  return truncate(q_binomial(2 * L + a, L - j), N);
}

QSeries central_limit_rhs(long N) { return inverse_pochhammer(PochSpec::infinite(1, 1), N); }

QSeries distinct_parts_sum(long N) {
  check_order(N);
  Accumulator acc(N);
  acc.add(QSeries::zero_upto(N));
  for (long n = 0; n * (n + 1) / 2 <= N; ++n) {
    const long e = n * (n + 1) / 2;
    acc.add(inverse_pochhammer(PochSpec::factorial(n, 1), N - e), e);
  }
  return acc.result();
}

QSeries distinct_parts_product(long N) {
  check_order(N);
  return pochhammer_inf(PochSpec::infinite(1, 1, -1), N);
}

}  // namespace qcap::classical
