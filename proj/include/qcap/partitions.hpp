#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap::part {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long size() const;
  long count() const { return static_cast<long>(parts_.size()); }
  bool distinct() const;
  bool contains(long part) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
};

std::string to_string(const Partition& p);

using Predicate = std::function<bool(const Partition&)>;

/// All partitions of n accepted by pred, in descending lexicographic order of
/// their part sequences: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate(long n, const Predicate& pred = {});
/// Number of partitions of n accepted by pred, without storing them.
std::int64_t count(long n, const Predicate& pred = {});

// Predicates.
bool is_distinct(const Partition& p);
/// Distinct parts, none congruent to +-m mod 6.
bool in_C(int m, const Partition& p);
/// Capparelli condition, read from the explicit pair list: no part equals m,
/// consecutive parts differ by at least 4 unless they are {3k, 3k+3} or {3k-1, 3k+1}.
bool in_D(int m, const Partition& p);
/// Same set, with the rule "a difference of 2 or 3 needs the pair sum divisible by 3".
bool in_D_sum_rule(int m, const Partition& p);
/// No part divisible by 3.
bool no_multiple_of_3(const Partition& p);

std::int64_t count_C(int m, long n);
std::int64_t count_D(int m, long n);

enum class Weighted { W1, W2, W3 };

struct WeightedTotals {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// Signed totals of both sides of a weighted partition theorem at n.
WeightedTotals weighted_sum(Weighted theorem, long n);

/// sum_{n=0}^{N} counter(n) q^n, truncated at N. Counts are evaluated in parallel.
QSeries gf_from_counts(const std::function<std::int64_t(long)>& counter, long N);

struct CountRow {
  long n;
  std::int64_t c1, d1, c2, d2;
};
/// Table n, C_1, D_1, C_2, D_2 for n = 0..n_max.
std::vector<CountRow> count_table(long n_max);
std::string to_csv(const std::vector<CountRow>& rows);

}  // namespace qcap::part
