#include "doctest.h"
#include "oracle.hpp"
#include "qcap/classical.hpp"
#include "qcap/qcombinat.hpp"

using namespace qcap;

namespace {

QSeries poly(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return QSeries::from_coeffs(0, std::move(v));
}

}  // namespace

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(PochSpec::factorial(0)) == QSeries::one());
  CHECK(pochhammer(PochSpec::factorial(2)) == poly({1, -1, -1, 1}));
  const QSeries p = inverse_pochhammer(PochSpec::infinite(1, 1), 4);
  CHECK(p == truncate(poly({1, 1, 2, 3, 5}), 4));
  for (long n = 0; n <= 20; ++n) CHECK(p.coeff(n) == (n <= 4 ? oracle::partition_count(n, n) : 0));
}

TEST_CASE("q_binomial examples") {
  CHECK(q_binomial(2, 1) == poly({1, 1}));
  CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(3, 4).is_zero());
}

TEST_CASE("q_multinomial examples") {
  const PochPart parts[] = {{0, 1}, {1, 1}, {0, 3}};
  CHECK(q_multinomial(2, parts) == poly({1, 0, -1}));
  const PochPart negative[] = {{-1, 1}, {3, 1}};
  CHECK(q_multinomial(2, negative).is_zero());
  const PochPart zeros[] = {{0, 1}, {0, 3}};
  CHECK(q_multinomial(0, zeros) == QSeries::one());
  const PochPart top{-1, 1};
  CHECK_THROWS_AS(q_multinomial(top, parts), NegativeLength);
}

TEST_CASE("q_trinomial_T and warnaar_S examples") {
  CHECK(q_trinomial_T(0, 3, 0) == QSeries::one());
  CHECK(q_trinomial_T(0, 3, 1).is_zero());
  // j = 0 gives [1,0][1,0] = 1 and j = 1 gives q [1,1][0,1] = 0.
  CHECK(q_trinomial_T(1, 0, 0) == QSeries::one());
  CHECK(q_trinomial_T(2, 1, 3).is_zero());
  CHECK(warnaar_S(0, 0, 0, 0) == QSeries::one());
  CHECK(warnaar_S(3, 1, 3, 1).is_zero());
}

TEST_CASE("jacobi3 examples") {
  CHECK(jacobi3(0) == 0);
  CHECK(jacobi3(1) == 1);
  CHECK(jacobi3(2) == -1);
  CHECK(jacobi3(-2) == 1);
  CHECK(jacobi3(-1) == -1);
}

TEST_CASE("jtp examples") {
  const QSeries s = classical::jtp_sum(0, 1, 4);
  CHECK(s == truncate(poly({1, 2, 0, 0, 2}), 4));
  CHECK(classical::jtp_product(0, 1, 4) == s);
  // z = -1/q: the product contains (1 - q^0) and the sum cancels in pairs j, 1-j.
  CHECK(classical::jtp_product(-1, 1, 10, -1).is_zero());
  CHECK(classical::jtp_sum(-1, 1, 10, -1).is_zero());
}

TEST_CASE("q-binomial theorem at N = 0") {
  const auto r = classical::q_binomial_theorem_check(3L, 1, 0);
  CHECK(r.verdict.equal);
  CHECK(r.lhs.coeff(0) == 1);
  CHECK(r.rhs.coeff(0) == 1);
}

TEST_CASE("property: q_binomial agrees with the Pascal oracle") {
  for (long base : {1L, 3L})
    for (long n = 0; n <= 12; ++n)
      for (long k = -1; k <= n + 1; ++k) CHECK(q_binomial(n, k, base) == oracle::to_series(oracle::gaussian(n, k, base)));
}

TEST_CASE("property: Pascal recurrences, symmetry and duality") {
  oracle::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const long n = g.integer(1, 30), k = g.integer(0, n);
    // [n, k] = [n-1, k-1] + q^k [n-1, k] = q^(n-k) [n-1, k-1] + [n-1, k].
    CHECK(q_binomial(n, k) == q_binomial(n - 1, k - 1) + shift(q_binomial(n - 1, k), k));
    CHECK(q_binomial(n, k) == shift(q_binomial(n - 1, k - 1), n - k) + q_binomial(n - 1, k));
    CHECK(q_binomial(n, k) == q_binomial(n, n - k));
    // [n, k] at 1/q is q^(-k(n-k)) [n, k].
    CHECK(invert_q(q_binomial(n, k)) == shift(q_binomial(n, k), -k * (n - k)));
  }
}

TEST_CASE("property: pochhammer agrees with the product oracle") {
  oracle::Gen g(12);
  for (int i = 0; i < 100; ++i) {
    const long shift = g.integer(1, 5), base = g.integer(1, 4), n = g.integer(0, 10);
    CHECK(pochhammer(PochSpec::finite(shift, base, n)) == oracle::to_series(oracle::pochhammer(shift, base, n)));
    const long N = g.integer(0, 40);
    CHECK(compare(pochhammer_inf(PochSpec::infinite(shift, base), N) *
                      truncate(inverse_pochhammer(PochSpec::infinite(shift, base), N), N),
                  QSeries::one())
              .equal);
  }
}

TEST_CASE("property: q_multinomial is a product of binomials") {
  oracle::Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const long a = g.integer(0, 6), b = g.integer(0, 6), c = g.integer(0, 6);
    const PochPart parts[] = {{a, 1}, {b, 1}, {c, 1}};
    CHECK(q_multinomial(a + b + c, parts) == q_binomial(a + b + c, a) * q_binomial(b + c, b));
  }
}

TEST_CASE("property: trinomial T against its defining sum") {
  for (long L = 0; L <= 7; ++L)
    for (long b = -3; b <= 3; ++b)
      for (long a = 0; a <= 3; ++a) {
        oracle::Poly sum;
        for (long j = 0; j <= L; ++j)
          sum = oracle::add(sum, oracle::mul(oracle::monomial(j * (j + b)),
                                             oracle::mul(oracle::gaussian(L, j), oracle::gaussian(L - j, j + a))));
        CHECK(q_trinomial_T(L, b, a) == oracle::to_series(sum));
      }
}

TEST_CASE("property: quadratic_index_range is tight") {
  oracle::Gen g(14);
  for (int i = 0; i < 200; ++i) {
    const long A = g.integer(1, 5), B = g.integer(-10, 10), C = g.integer(-10, 10), N = g.integer(-20, 50);
    const IndexRange r = quadratic_index_range(A, B, C, N);
    for (long j = -40; j <= 40; ++j) {
      const bool inside = A * j * j + B * j + C <= N;
      CHECK(inside == (!r.empty() && r.lo <= j && j <= r.hi));
    }
  }
}
