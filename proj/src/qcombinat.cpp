#include "qcap/qcombinat.hpp"

#include <cmath>
#include <map>
#include <tuple>
#include <unordered_map>

namespace qcap {

namespace {

void check_base(long base) {
  if (base < 1) throw ParamOutOfRange("Pochhammer base must be positive");
}

// Divides by (1 - sign q^e) for any integer e, rewriting a non-positive exponent
// as -sign q^e (1 - sign q^-e).
QSeries divide_any_factor(const QSeries& a, long e, int sign) {
  if (e > 0) return div_factor(a, e, sign);
  if (e == 0) throw UnboundedBelow("division by a vanishing or constant factor (1 -+ 1)");
  return shift(div_factor(a, -e, sign), -e) * Int(-sign);
}

}  // namespace

QSeries pochhammer(const PochSpec& spec) {
  check_base(spec.base);
  if (!spec.length) throw Error("pochhammer: infinite length needs a truncation order");
  if (*spec.length < 0) throw NegativeLength("pochhammer: negative length");
  QSeries r = QSeries::one();
  for (long i = 0; i < *spec.length; ++i) r = mul_factor(r, spec.shift + spec.base * i, spec.sign);
  return r;
}

QSeries pochhammer_inf(const PochSpec& spec, long N) {
  check_base(spec.base);
  if (spec.shift < 1) throw UnboundedBelow("pochhammer_inf: shift must be at least 1");
  QSeries r = truncate(QSeries::one(), N);
  const long count = spec.length ? *spec.length : -1;
  for (long i = 0, e = spec.shift; e <= N && (count < 0 || i < count); ++i, e += spec.base)
    r = mul_factor(r, e, spec.sign);
  return r;
}

QSeries inverse_pochhammer(const PochSpec& spec, long N) {
  check_base(spec.base);
  if (spec.shift < 1) throw UnboundedBelow("inverse_pochhammer: shift must be at least 1");
  if (spec.length && *spec.length < 0) throw NegativeLength("inverse_pochhammer: negative length");
  QSeries r = truncate(QSeries::one(), N);
  const long count = spec.length ? *spec.length : -1;
  for (long i = 0, e = spec.shift; e <= N && (count < 0 || i < count); ++i, e += spec.base)
    r = div_factor(r, e, spec.sign);
  return r;
}

QSeries infinite_product(std::span<const PochSpec> numer, std::span<const PochSpec> denom,
                         long N) {
  // Factors with exponent <= 0 go into an exact Laurent prefactor; the rest are
  // runs e, e + stride, ... of (1 - sign q^e), possibly unbounded.
  struct Run {
    long first;
    long stride;
    std::optional<long> count;
    int sign;
    bool divide;
  };
  QSeries exact = QSeries::one();
  std::vector<Run> runs;
  auto collect = [&](const PochSpec& p, bool divide) {
    check_base(p.base);
    if (p.length && *p.length < 0) throw NegativeLength("infinite_product: negative length");
    long i = 0, e = p.shift;
    for (; e <= 0 && (!p.length || i < *p.length); ++i, e += p.base) {
      if (!divide) {
        if (e == 0 && p.sign > 0) return false;
        exact = mul_factor(exact, e, p.sign);
      } else {
        if (e == 0) throw UnboundedBelow("infinite_product: denominator factor (1 -+ 1)");
        // 1/(1 - s q^e) = -s q^-e / (1 - s q^-e)
        exact = shift(exact, -e) * Int(-p.sign);
        runs.push_back({-e, 1, 1, p.sign, true});
      }
    }
    std::optional<long> rest;
    if (p.length) rest = *p.length - i;
    if (!rest || *rest > 0) runs.push_back({e, p.base, rest, p.sign, divide});
    return true;
  };
  for (const auto& p : numer)
    if (!collect(p, false)) return QSeries::zero_upto(N);
  for (const auto& p : denom) collect(p, true);

  const long low = exact.is_zero() ? 0 : exact.min_exponent();
  const long M = N - std::min(low, 0L);
  QSeries series = truncate(QSeries::one(), M);
  for (const Run& r : runs) {
    long e = r.first;
    for (long k = 0; e <= M && (!r.count || k < *r.count); ++k, e += r.stride)
      series = r.divide ? div_factor(series, e, r.sign) : mul_factor(series, e, r.sign);
  }
  return truncate(mul(exact, series), N);
}

const QSeries& qfactorial(long n, long base) {
  check_base(base);
  if (n < 0) throw NegativeLength("qfactorial: negative length");
  thread_local std::map<std::pair<long, long>, QSeries> cache;
  auto it = cache.find({n, base});
  if (it != cache.end()) return it->second;
  QSeries r = n == 0 ? QSeries::one() : mul_factor(qfactorial(n - 1, base), n * base, 1);
  return cache.emplace(std::make_pair(n, base), std::move(r)).first->second;
}

QSeries q_multinomial(std::span<const PochPart> numer, std::span<const PochPart> denom) {
  for (const auto& d : denom)
    if (d.length < 0) return QSeries();
  std::map<long, long> count;
  for (const auto& p : numer) {
    check_base(p.base);
    if (p.length < 0) throw NegativeLength("q_multinomial: negative numerator length");
    for (long i = 0; i < p.length; ++i) ++count[p.first_exponent() + p.base * i];
  }
  for (const auto& p : denom) {
    check_base(p.base);
    for (long i = 0; i < p.length; ++i) --count[p.first_exponent() + p.base * i];
  }
  QSeries r = QSeries::one();
  for (const auto& [e, c] : count) {
    if (c > 0 && e == 0) return QSeries();
    for (long k = 0; k < c; ++k) r = mul_factor(r, e, 1);
  }
  for (auto it = count.rbegin(); it != count.rend(); ++it)
    for (long k = 0; k < -it->second; ++k) r = divide_any_factor(r, it->first, 1);
  return r;
}

QSeries q_multinomial(const PochPart& top, std::span<const PochPart> parts) {
  return q_multinomial(std::span<const PochPart>(&top, 1), parts);
}

QSeries q_multinomial(long top, std::span<const PochPart> parts) {
  return q_multinomial(PochPart{top, 1, std::nullopt}, parts);
}

const QSeries& q_binomial(long top, long bottom, long base) {
  check_base(base);
  static const QSeries zero;
  if (bottom < 0 || bottom > top) return zero;
  struct Hash {
    std::size_t operator()(const std::tuple<long, long, long>& k) const {
      auto [a, b, c] = k;
      return std::hash<long>()(a * 1000003L + b * 1009L + c);
    }
  };
  thread_local std::unordered_map<std::tuple<long, long, long>, QSeries, Hash> cache;
  const auto key = std::make_tuple(top, bottom, base);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const long small = std::min(bottom, top - bottom);
  // [top, small] = (q^(top-small+1); q)_small / (q; q)_small, in base q^base.
  const PochPart num{small, base, base * (top - small + 1)};
  const PochPart den{small, base, std::nullopt};
  QSeries r = q_multinomial(std::span<const PochPart>(&num, 1), std::span<const PochPart>(&den, 1));
  return cache.emplace(key, std::move(r)).first->second;
}

QSeries q_trinomial_T(long L, long b, long a, long base) {
  if (L < 0) throw ParamOutOfRange("q_trinomial_T: L must be non-negative");
  QSeries r;
  for (long j = 0; j <= L; ++j) {
    const QSeries& b1 = q_binomial(L, j, base);
    const QSeries& b2 = q_binomial(L - j, j + a, base);
    if (b1.is_zero() || b2.is_zero()) continue;
    r += shift(b1 * b2, base * j * (j + b));
  }
  return r;
}

QSeries warnaar_S(long L, long M, long a, long b, long base) {
  if (L < 0 || M < 0) throw ParamOutOfRange("warnaar_S: L and M must be non-negative");
  QSeries r;
  for (long n = std::max(0L, -a); n <= M - a + b; ++n) {
    const QSeries& b1 = q_binomial(M + L - a - 2 * n, M, base);
    if (b1.is_zero()) continue;
    const QSeries& b2 = q_binomial(M - a + b, n, base);
    const QSeries& b3 = q_binomial(M + a - b, n + a, base);
    if (b2.is_zero() || b3.is_zero()) continue;
    r += shift(b1 * b2 * b3, base * n * (n + a));
  }
  return r;
}

int jacobi3(long j) {
  switch (((j % 3) + 3) % 3) {
    case 1:
      return 1;
    case 2:
      return -1;
    default:
      return 0;
  }
}

IndexRange quadratic_index_range(long A, long B, long C, long N) {
  if (A <= 0) throw Error("quadratic_index_range: leading coefficient must be positive");
  auto f = [&](long j) {
    const __int128 x = j;
    return static_cast<__int128>(A) * x * x + static_cast<__int128>(B) * x + C;
  };
  const long double disc = static_cast<long double>(B) * B -
                           4.0L * static_cast<long double>(A) * (static_cast<long double>(C) - N);
  // The vertex is the best candidate; if it fails nothing does.
  const long v = static_cast<long>(std::llround(-static_cast<long double>(B) / (2.0L * A)));
  long vbest = v;
  for (long d = -1; d <= 1; ++d)
    if (f(v + d) < f(vbest)) vbest = v + d;
  if (disc < 0 && f(vbest) > N) return {};
  if (f(vbest) > N) return {};
  const long double sq = std::sqrt(std::max(disc, 0.0L));
  long lo = static_cast<long>(std::floor((-B - sq) / (2.0L * A)));
  long hi = static_cast<long>(std::ceil((-B + sq) / (2.0L * A)));
  lo = std::min(lo, vbest);
  hi = std::max(hi, vbest);
  while (f(lo) > N) ++lo;
  while (f(lo - 1) <= N) --lo;
  while (f(hi) > N) --hi;
  while (f(hi + 1) <= N) ++hi;
  return {lo, hi};
}

}  // namespace qcap
