#pragma once

#include <map>
#include <random>

#include "qcap/qseries.hpp"

// Slow reference implementations that share no code with the library.
namespace oracle {

using qcap::Int;
using qcap::QSeries;

/// Sparse Laurent polynomial: exponent -> non-zero coefficient.
using Poly = std::map<long, Int>;

inline void put(Poly& p, long e, const Int& c) {
  Int& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline Poly from_series(const QSeries& s) {
  Poly p;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) put(p, s.offset() + static_cast<long>(i), s.coeffs()[i]);
  return p;
}

inline QSeries to_series(const Poly& p) {
  if (p.empty()) return QSeries();
  const long lo = p.begin()->first, hi = p.rbegin()->first;
  std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, v] : p) c[static_cast<std::size_t>(e - lo)] = v;
  return QSeries::from_coeffs(lo, std::move(c));
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) put(r, e, c);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) put(r, ea + eb, ca * cb);
  return r;
}

inline Poly monomial(long e, long c = 1) { return Poly{{e, Int(c)}}; }

inline Poly truncate(const Poly& p, long N) {
  Poly r;
  for (const auto& [e, c] : p)
    if (e <= N) r[e] = c;
  return r;
}

/// Gaussian binomial [n, k] in base q^base by the Pascal recurrence
/// [n, k] = [n-1, k-1] + q^(base k) [n-1, k].
inline Poly gaussian(long n, long k, long base = 1) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<Poly>> t(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    t[i].resize(static_cast<std::size_t>(i + 1));
    t[i][0] = monomial(0);
    t[i][i] = monomial(0);
    for (long j = 1; j < i; ++j) t[i][j] = add(t[i - 1][j - 1], mul(monomial(base * j), t[i - 1][j]));
  }
  return t[n][k];
}

/// prod_{i<n} (1 - q^(shift + base i)).
inline Poly pochhammer(long shift, long base, long n) {
  Poly r = monomial(0);
  for (long i = 0; i < n; ++i) r = mul(r, add(monomial(0), monomial(shift + base * i, -1)));
  return r;
}

/// Partitions of n into distinct parts accepted by keep, counted by brute force
/// over subsets of {1..n}.
template <class Keep>
long distinct_count(long n, Keep keep) {
  if (n == 0) return 1;
  long total = 0;
  const unsigned long limit = 1UL << n;
  for (unsigned long mask = 1; mask < limit; ++mask) {
    long sum = 0;
    std::vector<long> parts;
    for (long i = n; i >= 1 && sum <= n; --i)
      if (mask >> (i - 1) & 1UL) {
        sum += i;
        parts.push_back(i);
      }
    if (sum == n && keep(parts)) ++total;
  }
  return total;
}

/// Number of partitions of n, by the recurrence over the largest part.
inline long partition_count(long n, long max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (long p = 1; p <= std::min(n, max_part); ++p) total += partition_count(n - p, p);
  return total;
}

/// Random test data drawn from a seeded engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Laurent polynomial with up to `terms` terms, exponents in [lo, hi],
  /// coefficients in [-cmax, cmax].
  QSeries laurent(long lo = -20, long hi = 20, int terms = 8, long cmax = 1000000) {
    Poly p;
    const long n = integer(0, terms);
    for (long i = 0; i < n; ++i) put(p, integer(lo, hi), Int(integer(-cmax, cmax)));
    return to_series(p);
  }

  /// Non-zero Laurent polynomial.
  QSeries nonzero(long lo = -20, long hi = 20, int terms = 8, long cmax = 1000000) {
    for (;;) {
      QSeries s = laurent(lo, hi, terms, cmax);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
