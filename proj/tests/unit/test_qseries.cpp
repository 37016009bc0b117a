#include "doctest.h"
#include "oracle.hpp"
#include "qcap/kernels.hpp"
#include "qcap/serialize.hpp"

using namespace qcap;

namespace {

QSeries poly(long offset, std::vector<long> c, std::optional<long> trunc = std::nullopt) {
  std::vector<Int> v(c.begin(), c.end());
  return QSeries::from_coeffs(offset, std::move(v), trunc);
}

constexpr int kTrials = 300;

}  // namespace

TEST_CASE("add examples") {
  const QSeries x = poly(-2, {3, 0, 1});
  CHECK(QSeries() + x == x);
  CHECK(poly(0, {1, 1}) + poly(1, {1, -1}) == poly(0, {1, 2, -1}));
  const QSeries s = poly(0, {1, 1}, 1) + QSeries::monomial(2);
  CHECK(s == poly(0, {1, 1}, 1));
  CHECK(s.truncation() == 1);
}

TEST_CASE("mul examples") {
  const QSeries x = poly(-1, {5, -2});
  CHECK(QSeries::one() * x == x);
  CHECK(poly(0, {1, -1}) * poly(0, {1, 1}) == poly(0, {1, 0, -1}));
  CHECK(QSeries::monomial(-1) * QSeries::monomial(2) == QSeries::monomial(1));
}

TEST_CASE("div_exact examples") {
  CHECK(div_exact(poly(0, {1, 0, -1}), poly(0, {1, -1})) == poly(0, {1, 1}));
  const QSeries x = poly(-3, {2, 0, 7, -1});
  CHECK(div_exact(x, x) == QSeries::one());
  const QSeries q2 = poly(0, {1, -1}) * poly(0, {1, 0, -1});
  CHECK(div_exact(q2, poly(0, {1, -1})) == poly(0, {1, 0, -1}));
  CHECK_THROWS_AS(div_exact(poly(0, {1, 1}), poly(0, {1, -1})), NonDivisible);
}

TEST_CASE("substitute_q_power and invert_q examples") {
  CHECK(substitute_q_power(poly(0, {1, 1}), 3) == poly(0, {1, 0, 0, 1}));
  CHECK(substitute_q_power(QSeries::monomial(-1), 2) == QSeries::monomial(-2));
  CHECK(substitute_q_power(QSeries(), 5).is_zero());
  CHECK(invert_q(QSeries::monomial(1)) == QSeries::monomial(-1));
  CHECK(invert_q(poly(0, {1, 1, 0, 1})) == poly(-3, {1, 0, 1, 1}));
  CHECK_THROWS_AS(invert_q(poly(0, {1}, 3)), TruncatedInput);
}

TEST_CASE("truncate and compare examples") {
  const QSeries t = truncate(poly(0, {1, 1, 0, 0, 0, 1}), 3);
  CHECK(t == poly(0, {1, 1}, 3));
  const QSeries z = truncate(QSeries(), 10);
  CHECK(z.is_zero());
  CHECK(z.truncation() == 10);

  CHECK(compare(poly(0, {1, 1}), poly(0, {1, 1})).equal);
  const Comparison c = compare(poly(0, {1, 1}, 1), poly(0, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(c.equal);
  CHECK(c.upto == 1);
  const Comparison d = compare(QSeries::one(), poly(0, {1, 1}));
  CHECK_FALSE(d.equal);
  REQUIRE(d.mismatch);
  CHECK(d.mismatch->exponent == 1);
  CHECK(d.mismatch->lhs == 0);
  CHECK(d.mismatch->rhs == 1);
}

TEST_CASE("text form") {
  CHECK(to_string(poly(0, {1, 2, 0, 0, -1})) == "1 + 2q - q^4");
  CHECK(to_string(QSeries()) == "0");
  CHECK(to_string(poly(0, {1, 1}, 3), true) == "1 + q + O(q^4)");
}

TEST_CASE("property: ring operations agree with the map oracle") {
  oracle::Gen g(101);
  for (int i = 0; i < kTrials; ++i) {
    const QSeries a = g.laurent(), b = g.laurent(), c = g.laurent();
    const auto pa = oracle::from_series(a), pb = oracle::from_series(b), pc = oracle::from_series(c);
    CHECK(a + b == oracle::to_series(oracle::add(pa, pb)));
    CHECK(a * b == oracle::to_series(oracle::mul(pa, pb)));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * QSeries::one() == a);
    CHECK(mul_serial(a, b) == a * b);
  }
}

TEST_CASE("property: canonical normalization") {
  oracle::Gen g(202);
  for (int i = 0; i < kTrials; ++i) {
    const QSeries a = g.laurent();
    if (!a.is_zero()) {
      CHECK(a.coeffs().front() != 0);
      CHECK(a.coeffs().back() != 0);
    } else {
      CHECK(a.offset() == 0);
    }
    std::vector<Int> padded(3, 0);
    padded.insert(padded.end(), a.coeffs().begin(), a.coeffs().end());
    padded.resize(padded.size() + 2, 0);
    CHECK(QSeries::from_coeffs(a.offset() - 3, padded) == a);
  }
}

TEST_CASE("property: div_exact inverts multiplication") {
  oracle::Gen g(303);
  for (int i = 0; i < kTrials; ++i) {
    const QSeries a = g.laurent(-10, 10, 6), b = g.nonzero(-10, 10, 6);
    CHECK(div_exact(a * b, b) == a);
  }
}

TEST_CASE("property: invert_q is an involutive ring homomorphism") {
  oracle::Gen g(404);
  for (int i = 0; i < kTrials; ++i) {
    const QSeries a = g.laurent(), b = g.laurent();
    CHECK(invert_q(invert_q(a)) == a);
    CHECK(invert_q(a * b) == invert_q(a) * invert_q(b));
    CHECK(invert_q(a + b) == invert_q(a) + invert_q(b));
    const long k = g.integer(1, 4);
    CHECK(substitute_q_power(a * b, k) == substitute_q_power(a, k) * substitute_q_power(b, k));
  }
}

TEST_CASE("property: truncated products agree with exact products below N") {
  oracle::Gen g(505);
  for (int i = 0; i < kTrials; ++i) {
    const QSeries a = g.laurent(0, 20), b = g.laurent(0, 20);
    const long N = g.integer(0, 25);
    const QSeries t = truncate(a, N) * truncate(b, N);
    CHECK(compare(t, a * b).equal);
    CHECK(t.truncation() == N);
    CHECK(t == oracle::to_series(oracle::truncate(oracle::mul(oracle::from_series(a), oracle::from_series(b)), N)) +
                   QSeries::zero_upto(N));
  }
}

TEST_CASE("property: power-series inverse") {
  oracle::Gen g(606);
  for (int i = 0; i < 100; ++i) {
    QSeries a = g.laurent(1, 10, 5, 50) + QSeries::constant(g.integer(0, 1) ? 1 : -1);
    const long N = g.integer(0, 30);
    CHECK(compare(truncate(a, N) * inverse(a, N), QSeries::one()).equal);
  }
}

TEST_CASE("property: div_factor and mul_factor") {
  oracle::Gen g(707);
  for (int i = 0; i < kTrials; ++i) {
    const QSeries a = g.laurent();
    const long e = g.integer(1, 6);
    const int sign = g.integer(0, 1) ? 1 : -1;
    CHECK(div_factor(mul_factor(a, e, sign), e, sign) == a);
  }
}

TEST_CASE("property: serial and parallel kernels agree") {
  oracle::Gen g(808);
  for (int i = 0; i < 40; ++i) {
    const auto na = static_cast<std::size_t>(g.integer(1, 600)), nb = static_cast<std::size_t>(g.integer(1, 600));
    std::vector<Int> a(na), b(nb);
    for (auto& c : a) c = g.integer(-1000000, 1000000);
    for (auto& c : b) c = g.integer(-1000000, 1000000);
    const std::size_t nout = static_cast<std::size_t>(g.integer(1, static_cast<long>(na + nb - 1)));
    std::vector<Int> s(nout), p(nout);
    kernel::convolve_serial(a.data(), na, b.data(), nb, s.data(), nout);
    kernel::convolve_parallel(a.data(), na, b.data(), nb, p.data(), nout);
    CHECK(s == p);
  }
}

TEST_CASE("property: JSON round trip, including big coefficients") {
  oracle::Gen g(909);
  for (int i = 0; i < 100; ++i) {
    QSeries a = g.laurent();
    a = a * a * a * a;
    if (g.integer(0, 1)) a = truncate(a, g.integer(-10, 60));
    CHECK(series_from_json(to_json(a)) == a);
  }
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"offset", "x"}}), ConfigError);
}
