#include "doctest.h"
#include "oracle.hpp"
#include "qcap/bailey.hpp"
#include "qcap/capparelli.hpp"
#include "qcap/hierarchy.hpp"

using namespace qcap;

TEST_CASE("bailey_F examples") {
  const auto unit = bailey::unit_alpha();
  for (long L = 0; L <= 5; ++L) CHECK(bailey::bailey_F(unit, L) == q_binomial(2 * L, L));
  const auto fin = bailey::jacobi_alpha("fin_cap1", 1, 0);
  CHECK(bailey::bailey_F(fin, 2) == QSeries::from_coeffs(0, {1, 0, 1, 0, -1}));
  CHECK(bailey::bailey_F(fin, 0) == fin(0));
}

TEST_CASE("bailey_step examples") {
  const auto unit = bailey::unit_alpha();
  const auto stepped = bailey::bailey_step(unit);
  for (long j = -3; j <= 3; ++j) CHECK(stepped(j) == unit(j));
  const auto fin = bailey::jacobi_alpha("fin_cap1", 1, 0);
  const auto one = bailey::bailey_step(fin), two = bailey::bailey_step(one);
  for (long j = -4; j <= 4; ++j) {
    CHECK(one(j) == QSeries::monomial(2 * j * j, jacobi3(j + 1)));
    CHECK(two(j) == QSeries::monomial(3 * j * j, jacobi3(j + 1)));
  }
}

TEST_CASE("bailey_lhs_transform examples") {
  const bailey::Sequence one = [](long) { return QSeries::one(); };
  const auto t = bailey::bailey_lhs_transform(one, 0, 1);
  CHECK(t(1) == QSeries::from_coeffs(0, {1, 1, -1}));
  const auto unit = bailey::unit_alpha();
  const auto tu = bailey::bailey_lhs_transform([&](long L) { return bailey::bailey_F(unit, L); }, 0, 1);
  for (long L = 0; L <= 5; ++L) CHECK(tu(L) == bailey::bailey_F(bailey::bailey_step(unit), L));
  const bailey::Sequence g = [](long L) { return QSeries::monomial(L); };
  CHECK(bailey::bailey_lhs_transform(g, 1, 3)(0) == QSeries::one());
}

TEST_CASE("verify_bailey_theorem examples") {
  CHECK(bailey::verify_bailey_theorem(bailey::unit_alpha(), 5).pass);
  CHECK(bailey::verify_bailey_theorem(bailey::jacobi_alpha("fin_cap1", 1, 0), 5).pass);
  const auto seed = hier::seed_alpha(hier::Family::Cap2Binomial);
  CHECK(seed.base == 3);
  CHECK(seed.a == 1);
  CHECK(bailey::verify_bailey_theorem(seed, 4).pass);
}

TEST_CASE("bailey_F of seed alphas reproduces the seed identities") {
  for (auto f : hier::all_families())
    for (long L = 0; L <= 5; ++L) CHECK(bailey::bailey_F(hier::seed_alpha(f), L) == hier::seed_lhs(f, L));
}

TEST_CASE("generate_hierarchy_lhs examples") {
  const hier::HierarchySpec b1{hier::Family::Cap1Binomial, 1, 0};
  CHECK(hier::generate_hierarchy_lhs(b1, 2) == hier::multisum_lhs(b1, 2));
  const hier::HierarchySpec d{hier::Family::Double, 2, 1};
  CHECK(hier::generate_hierarchy_lhs(d, 2) == hier::multisum_lhs(d, 2));
  CHECK(hier::generate_hierarchy_lhs(d, 3) == hier::rhs(d, 3));
  // At L = 0 every index vanishes except j = -1 in the a = 1 base-q^3 seeds,
  // whose term q^(3-2) [1, 1] survives.
  for (auto f : hier::all_families()) {
    const hier::HierarchySpec s{f, 1, 0};
    QSeries expected = QSeries::one();
    if (f == hier::Family::Cap2Binomial) expected = QSeries::from_coeffs(0, {1, 1});
    if (f == hier::Family::SumCapparelli) expected = QSeries::constant(2);
    CAPTURE(hier::info(f).id);
    CHECK(hier::generate_hierarchy_lhs(s, 0) == expected);
    CHECK(hier::multisum_lhs(s, 0) == expected);
    CHECK(hier::rhs(s, 0) == expected);
  }
  CHECK_THROWS_AS(hier::validate({hier::Family::Cap1, 2, 1}), ParamOutOfRange);
  CHECK_THROWS_AS(hier::validate({hier::Family::Double, 2, 3}), ParamOutOfRange);
  CHECK_THROWS_AS(hier::validate({hier::Family::Cap1, 0, 0}), ParamOutOfRange);
}

TEST_CASE("twisted chain checkpoints") {
  for (long L = 0; L <= 5; ++L) {
    CHECK(hier::first_application_lhs(L) == hier::first_application_rhs(L));
    CHECK(hier::after_k_transform_lhs(L) == hier::after_k_transform_rhs(L));
    CHECK(hier::first_application_lhs(L) == hier::generate_hierarchy_lhs({hier::Family::Double, 1, 1}, L));
  }
}

TEST_CASE("property: bailey_F against a direct oracle sum") {
  for (const auto& alpha : bailey::catalog())
    for (long L = 0; L <= 4; ++L) {
      oracle::Poly sum;
      for (long j = -L - alpha.a; j <= L; ++j)
        sum = oracle::add(sum, oracle::mul(oracle::from_series(alpha(j)),
                                           oracle::gaussian(2 * L + alpha.a, L - j, alpha.base)));
      CHECK(bailey::bailey_F(alpha, L) == oracle::to_series(sum));
    }
}
