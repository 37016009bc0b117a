#include "qcap/partitions.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcap::part {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool Partition::distinct() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::contains(long part) const {
  return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ')';
  return os.str();
}

namespace {

// Calls visit(parts) for every partition of n with parts <= max_part, largest
// parts first.
template <typename Visit>
void for_each_partition(long n, long max_part, std::vector<long>& parts, Visit& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (long p = std::min(n, max_part); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(n - p, p, parts, visit);
    parts.pop_back();
  }
}

template <typename Visit>
void for_each_partition(long n, Visit visit) {
  if (n < 0) throw ParamOutOfRange("n must be non-negative");
  std::vector<long> parts;
  for_each_partition(n, n, parts, visit);
}

long mod(long a, long m) { return ((a % m) + m) % m; }

void check_m(int m) {
  if (m != 1 && m != 2) throw ParamOutOfRange("m must be 1 or 2");
}

}  // namespace

std::vector<Partition> enumerate(long n, const Predicate& pred) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<long>& parts) {
    Partition p(parts);
    if (!pred || pred(p)) out.push_back(std::move(p));
  });
  return out;
}

std::int64_t count(long n, const Predicate& pred) {
  std::int64_t c = 0;
  for_each_partition(n, [&](const std::vector<long>& parts) {
    if (!pred || pred(Partition(parts))) ++c;
  });
  return c;
}

bool is_distinct(const Partition& p) { return p.distinct(); }

bool in_C(int m, const Partition& p) {
  check_m(m);
  if (!p.distinct()) return false;
  for (long x : p.parts())
    if (mod(x, 6) == m || mod(x, 6) == 6 - m) return false;
  return true;
}

bool in_D(int m, const Partition& p) {
  check_m(m);
  if (p.contains(m)) return false;
  const auto& v = p.parts();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const long big = v[i], small = v[i + 1];
    const long d = big - small;
    if (d >= 4) continue;
    // {3k, 3k+3} with k >= 1, or {3k-1, 3k+1} with k >= 1.
    if (d == 3 && small % 3 == 0 && small >= 3) continue;
    if (d == 2 && mod(small + 1, 3) == 0 && small >= 2) continue;
    return false;
  }
  return true;
}

bool in_D_sum_rule(int m, const Partition& p) {
  check_m(m);
  if (p.contains(m)) return false;
  const auto& v = p.parts();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const long d = v[i] - v[i + 1];
    if (d >= 4) continue;
    if ((d == 2 || d == 3) && (v[i] + v[i + 1]) % 3 == 0) continue;
    return false;
  }
  return true;
}

bool no_multiple_of_3(const Partition& p) {
  return std::none_of(p.parts().begin(), p.parts().end(), [](long x) { return x % 3 == 0; });
}

std::int64_t count_C(int m, long n) {
  check_m(m);
  return count(n, [m](const Partition& p) { return in_C(m, p); });
}

std::int64_t count_D(int m, long n) {
  check_m(m);
  return count(n, [m](const Partition& p) { return in_D(m, p); });
}

namespace {

// Signed count over P of partitions with #(pi) mod 3 != excluded, with weight
// (-1) when #(pi) mod 3 == negative_residue.
std::int64_t signed_p3(long n, long excluded, long negative_residue) {
  std::int64_t total = 0;
  for_each_partition(n, [&](const std::vector<long>& parts) {
    const long r = static_cast<long>(parts.size()) % 3;
    if (r == excluded) return;
    total += r == negative_residue ? -1 : 1;
  });
  return total;
}

}  // namespace

WeightedTotals weighted_sum(Weighted theorem, long n) {
  if (n < 0) throw ParamOutOfRange("n must be non-negative");
  long excluded_lhs, excluded_rhs, negative_rhs;
  switch (theorem) {
    case Weighted::W1:
      excluded_lhs = 0, excluded_rhs = 0, negative_rhs = 2;
      break;
    case Weighted::W2:
      excluded_lhs = 2, excluded_rhs = 1, negative_rhs = 0;
      break;
    default:
      excluded_lhs = 1, excluded_rhs = 2, negative_rhs = 0;
      break;
  }
  WeightedTotals t;
  for_each_partition(n, [&](const std::vector<long>& parts) {
    if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return;
    const long k = static_cast<long>(parts.size());
    if (k % 3 == excluded_lhs) return;
    long mu;
    if (theorem == Weighted::W1)
      mu = k + (k % 3 == 2 ? 1 : 0) + 1;
    else
      mu = k + (k % 3 == 0 ? 1 : 0);
    t.lhs += mu % 2 == 0 ? 1 : -1;
  });
  // Pairs (pi_1, pi_2) in P_2 x P_3 with |pi_1| = k, |pi_2| = n - k.
  for (long k = 0; k <= n; ++k) {
    const std::int64_t p2 = count(k, no_multiple_of_3);
    if (p2 == 0) continue;
    t.rhs += p2 * signed_p3(n - k, excluded_rhs, negative_rhs);
  }
  return t;
}

QSeries gf_from_counts(const std::function<std::int64_t(long)>& counter, long N) {
  if (N < 0) throw ParamOutOfRange("N must be non-negative");
  std::vector<Int> c(static_cast<std::size_t>(N + 1));
  std::vector<std::int64_t> raw(static_cast<std::size_t>(N + 1));
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n <= N; ++n) raw[static_cast<std::size_t>(n)] = counter(n);
  for (long n = 0; n <= N; ++n) c[static_cast<std::size_t>(n)] = Int(static_cast<long>(raw[static_cast<std::size_t>(n)]));
  return QSeries::from_coeffs(0, std::move(c), N);
}

std::vector<CountRow> count_table(long n_max) {
  if (n_max < 0) throw ParamOutOfRange("n_max must be non-negative");
  std::vector<CountRow> rows(static_cast<std::size_t>(n_max + 1));
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n <= n_max; ++n)
    rows[static_cast<std::size_t>(n)] = {n, count_C(1, n), count_D(1, n), count_C(2, n), count_D(2, n)};
  return rows;
}

std::string to_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "n,C_1,D_1,C_2,D_2\n";
  for (const auto& r : rows) os << r.n << ',' << r.c1 << ',' << r.d1 << ',' << r.c2 << ',' << r.d2 << '\n';
  return os.str();
}

}  // namespace qcap::part
