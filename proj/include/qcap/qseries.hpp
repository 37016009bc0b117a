#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcap/errors.hpp"

namespace qcap {

using Int = mpz_class;

/// Laurent polynomial or truncated power series in q with integer coefficients.
///
/// Stored densely: coeffs[i] is the coefficient of q^(offset + i). The first
/// and last stored coefficients are non-zero; the zero series has no
/// coefficients and offset 0. When a truncation N is present, coefficients of
/// q^k with k > N are unknown and never stored.
class QSeries {
 public:
  QSeries() = default;

  static QSeries constant(const Int& c);
  static QSeries one() { return constant(1); }
  static QSeries monomial(long exponent, const Int& c = 1);
  static QSeries from_coeffs(long offset, std::vector<Int> coeffs,
                             std::optional<long> truncation = std::nullopt);
  /// The zero series known up to q^N.
  static QSeries zero_upto(long N);

  long offset() const { return offset_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const std::optional<long>& truncation() const { return trunc_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return !trunc_.has_value(); }
  /// Lowest and highest exponent with a non-zero coefficient (series must be non-zero).
  long min_exponent() const { return offset_; }
  long max_exponent() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^e; zero outside the stored range.
  Int coeff(long e) const;
  /// Whether the coefficient of q^e is determined.
  bool known(long e) const { return !trunc_ || e <= *trunc_; }

  QSeries& operator+=(const QSeries& b);
  QSeries& operator-=(const QSeries& b);
  QSeries& operator*=(const QSeries& b);

  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

 private:
  void normalize();

  long offset_ = 0;
  std::vector<Int> coeffs_;
  std::optional<long> trunc_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const Int& c);

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
/// Serial reference product, bypassing the parallel kernel.
QSeries mul_serial(const QSeries& a, const QSeries& b);

/// a * q^e.
QSeries shift(const QSeries& a, long e);
/// a * (1 - sign * q^e).
QSeries mul_factor(const QSeries& a, long e, int sign = 1);
/// a / (1 - sign * q^e) for e >= 1. Exact input must be divisible (NonDivisible
/// otherwise); a truncated input is expanded as a power series up to its truncation.
QSeries div_factor(const QSeries& a, long e, int sign = 1);

/// Exact quotient a / b in the Laurent polynomial ring.
QSeries div_exact(const QSeries& a, const QSeries& b);
/// Multiplicative inverse of a power series with constant term +-1, to order N.
QSeries inverse(const QSeries& a, long N);

/// Every exponent e becomes k*e. A truncation N becomes k*N + k - 1.
QSeries substitute_q_power(const QSeries& a, long k);
/// q -> 1/q. Throws TruncatedInput on truncated input.
QSeries invert_q(const QSeries& a);
/// Drop coefficients above q^N; the result carries truncation min(N, old).
QSeries truncate(const QSeries& a, long N);

/// Running sum of shifted, scaled terms. With a truncation N every term is cut
/// at q^N and the result carries the smallest truncation seen.
class Accumulator {
 public:
  Accumulator() = default;
  explicit Accumulator(std::optional<long> truncation) : trunc_(truncation) {}

  /// Adds scale * q^shift * t.
  void add(const QSeries& t, long shift = 0, long scale = 1);
  void sub(const QSeries& t, long shift = 0) { add(t, shift, -1); }
  QSeries result() const;

 private:
  long lo_ = 0;
  std::vector<Int> c_;
  std::optional<long> trunc_;
};

struct Mismatch {
  long exponent = 0;
  Int lhs;
  Int rhs;
};

struct Comparison {
  bool equal = false;
  /// Set when at least one side is truncated: agreement is checked up to q^upto.
  std::optional<long> upto;
  std::optional<Mismatch> mismatch;

  explicit operator bool() const { return equal; }
};

/// Coefficientwise comparison, reporting the smallest differing exponent.
Comparison compare(const QSeries& a, const QSeries& b);

/// Human-readable polynomial, e.g. "1 + 2q - q^4". With show_order a
/// truncated series gets a trailing "+ O(q^(N+1))".
std::string to_string(const QSeries& a, bool show_order = false);

/// Canonical report form: "q^e1*c1 + q^e2*c2 + ..." in ascending exponents.
std::string to_canonical_string(const QSeries& a);

}  // namespace qcap
