#include "doctest.h"
#include "oracle.hpp"
#include "qcap/partitions.hpp"
#include "qcap/qcombinat.hpp"

using namespace qcap;
using part::Partition;

namespace {

bool c_oracle(int m, const std::vector<long>& parts) {
  for (long p : parts)
    if (p % 6 == m || p % 6 == 6 - m) return false;
  return true;
}

// Difference conditions read straight from the pair list.
bool d_oracle(int m, const std::vector<long>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == m) return false;
    if (i + 1 == parts.size()) break;
    const long hi = parts[i], lo = parts[i + 1];
    if (hi - lo >= 4) continue;
    const bool pair3 = lo % 3 == 0 && hi == lo + 3;
    const bool pair2 = lo % 3 == 2 && hi == lo + 2;
    if (!pair3 && !pair2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumerate examples") {
  const auto all = part::enumerate(4);
  const std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                        Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
  CHECK(all == expected);
  const auto empty = part::enumerate(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].parts().empty());
  const auto distinct = part::enumerate(6, part::is_distinct);
  const std::vector<Partition> d6{Partition({6}), Partition({5, 1}), Partition({4, 2}), Partition({3, 2, 1})};
  CHECK(distinct == d6);
}

TEST_CASE("count examples") {
  CHECK(part::count_C(1, 0) == 1);
  CHECK(part::count_C(1, 6) == 2);
  CHECK(part::count_C(2, 1) == 1);
  CHECK(part::count_D(1, 0) == 1);
  CHECK(part::count_D(1, 6) == 2);
  const auto d = part::enumerate(6, [](const Partition& p) { return part::in_D(1, p); });
  CHECK(d == std::vector<Partition>{Partition({6}), Partition({4, 2})});
}

TEST_CASE("weighted examples") {
  const auto w3 = part::weighted_sum(part::Weighted::W1, 3);
  CHECK(w3.lhs == 2);
  CHECK(w3.rhs == 2);
  // The empty partition has no parts and is excluded, matching the constant term 0.
  const auto w0 = part::weighted_sum(part::Weighted::W1, 0);
  CHECK(w0.lhs == 0);
  CHECK(w0.rhs == 0);
}

TEST_CASE("gf_from_counts examples") {
  const QSeries p = part::gf_from_counts([](long n) { return part::count(n); }, 4);
  CHECK(p == truncate(QSeries::from_coeffs(0, {1, 1, 2, 3, 5}), 4));
  const QSeries z = part::gf_from_counts([](long) { return std::int64_t{0}; }, 7);
  CHECK(z.is_zero());
  CHECK(z.truncation() == 7);
  const PochSpec num[] = {PochSpec::infinite(2, 6, -1), PochSpec::infinite(4, 6, -1), PochSpec::infinite(3, 3, -1)};
  CHECK(part::gf_from_counts([](long n) { return part::count_C(1, n); }, 20) ==
        infinite_product(num, std::span<const PochSpec>(), 20));
}

TEST_CASE("property: C and D against brute-force subset oracles") {
  for (int m : {1, 2})
    for (long n = 0; n <= 18; ++n) {
      CHECK(part::count_C(m, n) == oracle::distinct_count(n, [m](const auto& p) { return c_oracle(m, p); }));
      CHECK(part::count_D(m, n) == oracle::distinct_count(n, [m](const auto& p) { return d_oracle(m, p); }));
    }
}

TEST_CASE("property: both D rules agree on every partition") {
  for (long n = 0; n <= 22; ++n)
    for (const auto& p : part::enumerate(n, part::is_distinct))
      for (int m : {1, 2}) CHECK(part::in_D(m, p) == part::in_D_sum_rule(m, p));
}

TEST_CASE("property: enumeration is complete and duplicate-free") {
  for (long n = 0; n <= 20; ++n) {
    const auto all = part::enumerate(n);
    CHECK(static_cast<long>(all.size()) == oracle::partition_count(n, n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].size() == n);
      if (i > 0) CHECK(all[i - 1].parts() > all[i].parts());
    }
    CHECK(part::count(n, part::is_distinct) == oracle::distinct_count(n, [](const auto&) { return true; }));
  }
}

TEST_CASE("property: count table and CSV") {
  const auto rows = part::count_table(12);
  REQUIRE(rows.size() == 13);
  for (const auto& r : rows) {
    CHECK(r.c1 == r.d1);
    CHECK(r.c2 == r.d2);
  }
  const std::string csv = part::to_csv(rows);
  CHECK(csv.rfind("n,C_1,D_1,C_2,D_2\n", 0) == 0);
}
