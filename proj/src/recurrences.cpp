#include "qcap/recurrences.hpp"

#include <omp.h>

#include <algorithm>
#include <array>

#include "qcap/capparelli.hpp"

namespace qcap::rec {

namespace {

QSeries x(long e) { return QSeries::monomial(e); }
// 1 - q^e
QSeries om(long e) { return QSeries::one() - x(e); }
QSeries sum(std::initializer_list<QSeries> terms) {
  QSeries r;
  for (const auto& t : terms) r += t;
  return r;
}
QSeries prod(std::initializer_list<QSeries> factors) {
  QSeries r = QSeries::one();
  for (const auto& f : factors) r *= f;
  return r;
}
const QSeries& one() {
  static const QSeries o = QSeries::one();
  return o;
}

Recurrence make(std::string id, std::string description, int order, long first_L,
                std::function<std::vector<QSeries>(long)> coeffs) {
  return Recurrence{std::move(id), std::move(description), order, first_L, std::move(coeffs)};
}

// Right-side terms of the order-4 b recurrence: b_L = -c1 b_{L-1} + c2 b_{L-2} - c3 b_{L-3} + c4 b_{L-4}.
std::array<QSeries, 4> b_order4_terms(long L) {
  const QSeries c1 = prod({sum({one(), x(2)}), sum({one(), x(1), -x(2 * L - 2)})});
  const QSeries c2 = prod({x(1), sum({prod({sum({one(), x(2)}), sum({one(), x(1), x(2)})}),
                                      -prod({x(2 * L - 3), QSeries::constant(2), sum({one(), x(1)}), sum({one(), x(2)})}),
                                      prod({x(4 * L - 7), sum({one(), x(2), x(4)})})})});
  const QSeries c3 =
      prod({x(3), sum({one(), x(2)}), om(2 * L - 4), om(2 * L - 5), sum({one(), x(1), -x(2 * L - 4)})});
  const QSeries c4 = prod({x(6), om(2 * L - 4), om(2 * L - 5), om(2 * L - 6), om(2 * L - 7)});
  return {c1, c2, c3, c4};
}

// Pieces of the S_2 recurrence shared by the uncorrected and corrected forms.
QSeries s2_first(long L) { return prod({om(L), sum({one(), x(1), x(2), -x(L - 1), -x(L)})}); }
QSeries s2_inner(long L) { return sum({one(), x(1), x(2), -x(L - 1), -x(2 * L - 1), -x(2 * L - 2)}); }
QSeries s2_last(long L) { return prod({x(3), om(L), om(L - 1), om(L - 2), om(2 * L - 3), om(2 * L - 4)}); }

QSeries wc_middle(long L) {
  return prod({x(5), om(L - 2),
               sum({one(), x(1), x(2), -x(L - 3), -x(2 * L - 4), -x(2 * L - 5), x(3 * L - 6), -x(3 * L - 7)})});
}
QSeries wc_last(long L) { return prod({x(9), om(L - 2), om(L - 4), om(2 * L - 5), om(2 * L - 6)}); }

}  // namespace

Recurrence rec_a_short() {
  return make("rec_a_short", "a_L = (1+q-q^(2L-1)) a_(L-1) - q(1-q^(2L-2))(1-q^(2L-3)) a_(L-2)", 2, 2,
              [](long L) -> std::vector<QSeries> {
                return {one(), -sum({one(), x(1), -x(2 * L - 1)}), prod({x(1), om(2 * L - 2), om(2 * L - 3)})};
              });
}

Recurrence rec_b_short() {
  return make("rec_b_short", "b_L = (1+q-q^(2L)) b_(L-1) - q(1-q^(2L-1))(1-q^(2L-2)) b_(L-2)", 2, 2,
              [](long L) -> std::vector<QSeries> {
                return {one(), -sum({one(), x(1), -x(2 * L)}), prod({x(1), om(2 * L - 1), om(2 * L - 2)})};
              });
}

Recurrence rec_b_order4() {
  return make("rec_b_order4", "order-4 recurrence of b_L, right side with corrected sign", 4, 4,
              [](long L) -> std::vector<QSeries> {
                const auto c = b_order4_terms(L);
                return {one(), -c[0], c[1], -c[2], c[3]};
              });
}

Recurrence rec_b_order4_uncorrected() {
  return make("rec_b_order4_uncorrected", "order-4 recurrence of b_L without the correction", 4, 4,
              [](long L) -> std::vector<QSeries> {
                const auto c = b_order4_terms(L);
                return {one(), c[0], -c[1], c[2], -c[3]};
              });
}

Recurrence rec_s1() {
  return make("rec_s1", "order-3 recurrence of the first double sum S_1", 3, 3, [](long L) -> std::vector<QSeries> {
    return {one(), -sum({one(), x(1), x(3), -x(L), -x(L + 2)}),
            prod({x(1), om(L - 1), sum({one(), x(2), x(3), -x(L + 1), -x(2 * L - 1), -x(2 * L - 2)})}),
            -prod({x(4), om(L - 1), om(L - 2), om(2 * L - 3), om(2 * L - 4)})};
  });
}

Recurrence rec_s2() {
  return make("rec_s2", "order-3 recurrence of S_2 with leading factor (1-q^(L-1)), corrected signs", 3, 3,
              [](long L) -> std::vector<QSeries> {
                return {om(L - 1), -s2_first(L), prod({x(1), om(L), om(L - 1), s2_inner(L)}), -s2_last(L)};
              });
}

Recurrence rec_s2_uncorrected() {
  return make("rec_s2_uncorrected", "order-3 recurrence of S_2 without the correction", 3, 3,
              [](long L) -> std::vector<QSeries> {
                QSeries plus = sum({one(), x(L - 1)});
                return {om(L - 1), s2_first(L), -prod({x(1), om(L), plus, s2_inner(L)}), s2_last(L)};
              });
}

Recurrence rec_c_order5() {
  return make("rec_c_order5", "order-5 recurrence of c_L", 5, 5, [](long L) -> std::vector<QSeries> {
    const QSeries p5 = sum({one(), x(1), x(2), x(3), x(4)});
    const QSeries c1 = sum({p5, -x(2 * L - 1), -x(L), -x(L + 2)});
    const QSeries c2 =
        prod({x(1), sum({prod({sum({one(), x(2)}), p5}),
                         -prod({x(L - 1), sum({one(), x(1)}), sum({one(), x(2)}), sum({one(), x(2)})}),
                         -prod({x(2 * L - 2), sum({one(), x(1)}), sum({QSeries::constant(2), x(2)})}),
                         prod({x(3 * L - 3), sum({one(), x(1)}), sum({one(), x(1)})}), x(4 * L - 5)})});
    const QSeries c3 = prod(
        {x(3), om(L - 2),
         sum({prod({sum({one(), x(2)}), p5}), -prod({x(L), sum({one(), x(2)})}),
              -prod({x(2 * L - 4), sum({one(), x(1)}), sum({one(), x(1) * Int(2), x(2) * Int(2), x(3), x(4)})}),
              -prod({x(3 * L - 5), sum({one(), x(1)}), sum({one(), x(1) * Int(-2)})}),
              prod({x(4 * L - 7), sum({QSeries::constant(2), x(1) * Int(2), x(2)})}), -x(5 * L - 7)})});
    const QSeries c4 =
        prod({x(6), om(L - 2), om(2 * L - 6), om(2 * L - 5),
              sum({p5, -prod({x(L - 3), sum({one(), x(2), x(3)})}), -prod({x(2 * L - 5), sum({one(), x(1), x(2)})}),
                   x(3 * L - 6)})});
    const QSeries c5 =
        prod({x(10), om(L - 2), om(L - 4), om(2 * L - 5), om(2 * L - 6), om(2 * L - 7), om(2 * L - 8)});
    return {one(), -c1, c2, -c3, c4, -c5};
  });
}

Recurrence witness_b() {
  return make("witness_b", "r_L - q^2(1+q-q^(2L-4)) r_(L-1) + q^5(1-q^(2L-4))(1-q^(2L-7)) r_(L-2)", 2, 4,
              [](long L) -> std::vector<QSeries> {
                return {one(), -prod({x(2), sum({one(), x(1), -x(2 * L - 4)})}),
                        prod({x(5), om(2 * L - 4), om(2 * L - 7)})};
              });
}

Recurrence witness_c() {
  return make("witness_c", "order-3 relation in r_L for c_L, corrected", 3, 5, [](long L) -> std::vector<QSeries> {
    return {one(),
            -prod({x(2), sum({one(), x(1), x(2), -x(L - 2), -x(L), x(2 * L - 2), -x(2 * L - 3)})}),
            wc_middle(L), -wc_last(L)};
  });
}

Recurrence witness_c_uncorrected() {
  return make("witness_c_uncorrected", "order-3 relation in r_L for c_L without the correction", 3, 5,
              [](long L) -> std::vector<QSeries> {
                return {one(),
                        -prod({x(2), sum({one(), x(1), x(2), -x(L - 2), x(L), x(2 * L - 2), x(2 * L - 3)})}),
                        wc_middle(L), wc_last(L)};
              });
}

Sequence::Sequence(std::string name, std::function<QSeries(long)> f, long L_max) : name_(std::move(name)) {
  if (L_max < 0) throw ParamOutOfRange("L_max must be non-negative");
  values_.resize(static_cast<std::size_t>(L_max + 1));
#pragma omp parallel for schedule(dynamic)
  for (long L = 0; L <= L_max; ++L) values_[static_cast<std::size_t>(L)] = f(L);
}

const QSeries& Sequence::operator()(long L) const {
  if (L < 0 || L > L_max()) throw ParamOutOfRange("sequence " + name_ + " not filled at L = " + std::to_string(L));
  return values_[static_cast<std::size_t>(L)];
}

Sequence a_lhs(long L_max) { return Sequence("a_lhs", [](long L) { return cap::fin_cap_lhs(1, L); }, L_max); }
Sequence a_rhs(long L_max) { return Sequence("a_rhs", [](long L) { return cap::fin_cap_rhs(1, L); }, L_max); }
Sequence b_rhs(long L_max) { return Sequence("b_rhs", [](long L) { return cap::fin_cap_rhs(2, L); }, L_max); }
Sequence c_lhs(long L_max) { return Sequence("c_lhs", [](long L) { return cap::fin_cap_lhs(2, L); }, L_max); }
Sequence s1(long L_max) { return Sequence("s1", [](long L) { return cap::fin_cap2_part(1, L); }, L_max); }
Sequence s2(long L_max) { return Sequence("s2", [](long L) { return cap::fin_cap2_part(2, L); }, L_max); }

namespace {

QSeries combination(const std::vector<QSeries>& c, const std::function<const QSeries&(long)>& s, long L) {
  QSeries r;
  for (std::size_t lag = 0; lag < c.size(); ++lag) r += c[lag] * s(L - static_cast<long>(lag));
  return r;
}

}  // namespace

RecurrenceReport verify_recurrence(const Sequence& seq, const Recurrence& r, long L_lo, long L_hi) {
  if (L_lo < r.order) throw ParamOutOfRange("window must start at L >= order");
  if (L_hi > seq.L_max()) throw ParamOutOfRange("sequence is not filled up to L_hi");
  RecurrenceReport out{r.id, seq.name(), L_lo, L_hi, true, std::nullopt, {}};
  std::vector<QSeries> residuals(static_cast<std::size_t>(std::max(0L, L_hi - L_lo + 1)));
  const auto at = [&seq](long L) -> const QSeries& { return seq(L); };
#pragma omp parallel for schedule(dynamic)
  for (long L = L_lo; L <= L_hi; ++L) residuals[static_cast<std::size_t>(L - L_lo)] = combination(r.coeffs(L), at, L);
  for (long L = L_lo; L <= L_hi; ++L) {
    const QSeries& res = residuals[static_cast<std::size_t>(L - L_lo)];
    if (!res.is_zero()) {
      out.pass = false;
      out.first_failing_L = L;
      out.residual = res;
      break;
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog(long L_hi) {
  return {
      {rec_a_short(), "a_rhs", 2, L_hi, true},
      {rec_a_short(), "a_lhs", 2, L_hi, true},
      {rec_b_short(), "b_rhs", 2, L_hi, true},
      {rec_b_order4(), "b_rhs", 4, L_hi, true},
      {rec_b_order4_uncorrected(), "b_rhs", 4, L_hi, false},
      {rec_s1(), "s1", 3, L_hi, true},
      {rec_s2(), "s2", 3, L_hi, true},
      {rec_s2_uncorrected(), "s2", 3, L_hi, false},
      {rec_c_order5(), "c_lhs", 5, L_hi, true},
      {rec_b_short(), "c_lhs", 2, L_hi, true},
  };
}

std::vector<CatalogResult> verify_catalog(long L_hi) {
  const std::vector<Sequence> seqs{a_lhs(L_hi), a_rhs(L_hi), b_rhs(L_hi), c_lhs(L_hi), s1(L_hi), s2(L_hi)};
  std::vector<CatalogResult> out;
  for (auto& e : catalog(L_hi)) {
    const auto it = std::find_if(seqs.begin(), seqs.end(), [&e](const Sequence& s) { return s.name() == e.sequence; });
    RecurrenceReport rep = verify_recurrence(*it, e.recurrence, e.L_lo, e.L_hi);
    out.push_back(CatalogResult{std::move(e), std::move(rep)});
  }
  return out;
}

std::vector<QSeries> compose(const Recurrence& outer, const Recurrence& inner, long L) {
  std::vector<QSeries> out(static_cast<std::size_t>(outer.order + inner.order + 1));
  const auto oc = outer.coeffs(L);
  for (std::size_t i = 0; i < oc.size(); ++i) {
    const auto ic = inner.coeffs(L - static_cast<long>(i));
    for (std::size_t k = 0; k < ic.size(); ++k) out[i + k] += oc[i] * ic[k];
  }
  return out;
}

WitnessReport verify_factor_witness(char which, long L_lo, long L_hi, bool uncorrected) {
  if (which != 'b' && which != 'c') throw ParamOutOfRange("witness must be b or c");
  const Recurrence inner = rec_b_short();
  const Recurrence outer = which == 'b' ? witness_b() : (uncorrected ? witness_c_uncorrected() : witness_c());
  const Recurrence target = which == 'b' ? (uncorrected ? rec_b_order4_uncorrected() : rec_b_order4()) : rec_c_order5();
  if (L_lo < outer.order + inner.order) throw ParamOutOfRange("window starts too early for the witness");
  const Sequence seq = which == 'b' ? b_rhs(L_hi) : c_lhs(L_hi);

  WitnessReport rep;
  rep.which = which;
  std::vector<QSeries> r(static_cast<std::size_t>(L_hi + 1));
  const auto at = [&seq](long L) -> const QSeries& { return seq(L); };
  for (long L = inner.order; L <= L_hi; ++L) r[static_cast<std::size_t>(L)] = combination(inner.coeffs(L), at, L);
  const auto fail = [&rep](long L, std::optional<int> lag) {
    if (!rep.first_failing_L) {
      rep.first_failing_L = L;
      rep.first_failing_lag = lag;
    }
  };
  for (long L = L_lo; L <= L_hi; ++L) {
    for (long l = L - outer.order; l <= L; ++l)
      if (!r[static_cast<std::size_t>(l)].is_zero()) {
        rep.residuals_vanish = false;
        fail(L, std::nullopt);
      }
    const QSeries rel = combination(outer.coeffs(L), [&r](long l) -> const QSeries& { return r[static_cast<std::size_t>(l)]; }, L);
    if (!rel.is_zero()) {
      rep.relation_holds = false;
      fail(L, std::nullopt);
    }
    const auto composed = compose(outer, inner, L);
    const auto expected = target.coeffs(L);
    for (std::size_t lag = 0; lag < composed.size(); ++lag) {
      const QSeries want = lag < expected.size() ? expected[lag] : QSeries();
      if (composed[lag] != want) {
        rep.expansion_matches = false;
        fail(L, static_cast<int>(lag));
        break;
      }
    }
  }
  return rep;
}

std::vector<QSeries> run_forward(const Recurrence& r, std::vector<QSeries> initial, long L_hi) {
  std::vector<QSeries> s = std::move(initial);
  for (long L = static_cast<long>(s.size()); L <= L_hi; ++L) {
    const auto c = r.coeffs(L);
    QSeries rest;
    for (std::size_t lag = 1; lag < c.size(); ++lag) rest += c[lag] * s[static_cast<std::size_t>(L) - lag];
    s.push_back(div_exact(-rest, c[0]));
  }
  return s;
}

InitialConditionReport verify_initial_condition_argument(char which, long L_hi) {
  InitialConditionReport rep;
  rep.which = which;
  rep.L_checked = L_hi;
  std::vector<Sequence> truth;
  std::vector<std::pair<Recurrence, int>> routes;  // recurrence, number of initial values
  switch (which) {
    case 'a':
      truth = {a_lhs(L_hi), a_rhs(L_hi)};
      routes = {{rec_a_short(), 2}};
      break;
    case 'b':
      truth = {b_rhs(L_hi)};
      routes = {{rec_b_short(), 2}, {rec_b_order4(), 4}};
      break;
    case 'c':
      truth = {c_lhs(L_hi)};
      routes = {{rec_b_short(), 2}, {rec_c_order5(), 5}};
      break;
    default:
      throw ParamOutOfRange("initial-condition argument is defined for a, b and c");
  }
  for (const auto& [r, n] : routes) {
    std::vector<QSeries> init;
    for (long L = 0; L < n; ++L) init.push_back(truth[0](L));
    const auto generated = run_forward(r, init, L_hi);
    for (const auto& t : truth)
      for (long L = 0; L <= L_hi; ++L)
        if (generated[static_cast<std::size_t>(L)] != t(L)) {
          rep.pass = false;
          if (!rep.first_failing_L || L < *rep.first_failing_L) rep.first_failing_L = L;
        }
  }
  return rep;
}

std::vector<NegativeControl> negative_controls() {
  std::vector<NegativeControl> out;
  const Sequence ones("constant_one", [](long) { return QSeries::one(); }, 3);
  out.push_back({"constant sequence against the short a-recurrence",
                 !verify_recurrence(ones, rec_a_short(), 2, 2).residual.is_zero()});

  Recurrence perturbed = rec_b_short();
  perturbed.id = "rec_b_short_perturbed";
  perturbed.coeffs = [](long L) -> std::vector<QSeries> {
    return {one(), -sum({one(), x(1), -x(2 * L + 1)}), prod({x(1), om(2 * L - 1), om(2 * L - 2)})};
  };
  const Sequence b = b_rhs(6);
  out.push_back({"short b-recurrence with one exponent changed",
                 !verify_recurrence(b, perturbed, 2, 6).residual.is_zero()});

  Recurrence wrong_witness = witness_b();
  wrong_witness.coeffs = [](long L) -> std::vector<QSeries> {
    return {one(), -prod({x(2), sum({one(), x(1), -x(2 * L - 4)})}), prod({x(6), om(2 * L - 4), om(2 * L - 7)})};
  };
  const auto composed = compose(wrong_witness, rec_b_short(), 6);
  const auto target = rec_b_order4().coeffs(6);
  bool differs = false;
  for (std::size_t i = 0; i < composed.size(); ++i) differs |= composed[i] != target[i];
  out.push_back({"b-witness with one exponent changed", differs});
  return out;
}

}  // namespace qcap::rec
