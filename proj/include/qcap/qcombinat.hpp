#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap {

/// (a; q^base)_length with a = sign * q^shift; length nullopt means infinite.
struct PochSpec {
  long shift = 1;
  long base = 1;
  std::optional<long> length;
  int sign = 1;

  static PochSpec finite(long shift, long base, long n, int sign = 1) {
    return {shift, base, n, sign};
  }
  static PochSpec infinite(long shift, long base, int sign = 1) {
    return {shift, base, std::nullopt, sign};
  }
  /// (q^k; q^k)_n.
  static PochSpec factorial(long n, long base = 1) { return {base, base, n, 1}; }
};

/// Exact finite product prod_{i<n} (1 - sign q^(shift + base*i)).
QSeries pochhammer(const PochSpec& spec);
/// Infinite product truncated at N; needs shift >= 1.
QSeries pochhammer_inf(const PochSpec& spec, long N);
/// 1 / (a; q^base)_n (finite or infinite) as a power series to order N; needs shift >= 1.
QSeries inverse_pochhammer(const PochSpec& spec, long N);

/// Product of infinite Pochhammers divided by infinite Pochhammers, to order N.
/// Factors with non-positive exponent are expanded exactly, so Laurent results
/// are allowed; a vanishing factor (1 - q^0) in the numerator gives zero, in the
/// denominator throws UnboundedBelow.
QSeries infinite_product(std::span<const PochSpec> numer, std::span<const PochSpec> denom,
                         long N);

/// (q^base; q^base)_n, memoized per thread.
const QSeries& qfactorial(long n, long base = 1);

/// Gaussian binomial [top, bottom] in base q^base; zero unless 0 <= bottom <= top.
/// Memoized per thread.
const QSeries& q_binomial(long top, long bottom, long base = 1);

/// One Pochhammer factor in a multinomial quotient: (q^shift; q^base)_length,
/// with shift defaulting to base.
struct PochPart {
  long length = 0;
  long base = 1;
  std::optional<long> shift;

  long first_exponent() const { return shift ? *shift : base; }
};

/// prod(numer) / prod(denom), computed exactly. Returns zero if any denominator
/// length is negative; NegativeLength for a negative numerator length;
/// NonDivisible if the quotient is not a polynomial.
QSeries q_multinomial(std::span<const PochPart> numer, std::span<const PochPart> denom);
QSeries q_multinomial(const PochPart& top, std::span<const PochPart> parts);
QSeries q_multinomial(long top, std::span<const PochPart> parts);

/// Andrews-Baxter T(L; b, a) = sum_j q^(j(j+b)) [L, j] [L-j, j+a], in base q^base.
QSeries q_trinomial_T(long L, long b, long a, long base = 1);

/// Warnaar's S(L, M; a, b) =
/// sum_n q^(n(n+a)) [M+L-a-2n, M] [M-a+b, n] [M+a-b, n+a], in base q^base.
QSeries warnaar_S(long L, long M, long a, long b, long base = 1);

/// Quadratic character mod 3: 0, 1, -1 for j = 0, 1, 2 (mod 3).
int jacobi3(long j);

/// Inclusive integer range; empty when lo > hi.
struct IndexRange {
  long lo = 0;
  long hi = -1;
  bool empty() const { return lo > hi; }
};

/// All integers j with A j^2 + B j + C <= N (A > 0). Every truncated
/// evaluator derives its summation bounds from this helper.
IndexRange quadratic_index_range(long A, long B, long C, long N);

}  // namespace qcap
