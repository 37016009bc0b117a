#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcap/qseries.hpp"

namespace qcap::rec {

/// sum_{lag=0}^{order} coeffs(L)[lag] * s(L - lag) = 0, coefficients kept
/// (leading factors such as (1 - q^(L-1)) are kept, never divided out).
struct Recurrence {
  std::string id;
  std::string description;
  int order = 0;
  /// First L at which every coefficient is defined and the leading one is non-zero.
  long first_L = 0;
  std::function<std::vector<QSeries>(long L)> coeffs;
};

// The recurrences of the finite identities.
Recurrence rec_a_short();
Recurrence rec_b_short();
/// Order-4 recurrence of b_L, with the sign of the right side corrected.
Recurrence rec_b_order4();
Recurrence rec_b_order4_uncorrected();
Recurrence rec_s1();
/// Order-3 recurrence of S_2, with signs and the middle factor corrected.
Recurrence rec_s2();
Recurrence rec_s2_uncorrected();
Recurrence rec_c_order5();

/// Values s(0..L_max) of a polynomial sequence, filled once and then read-only.
class Sequence {
 public:
  Sequence(std::string name, std::function<QSeries(long)> f, long L_max);
  const std::string& name() const { return name_; }
  long L_max() const { return static_cast<long>(values_.size()) - 1; }
  const QSeries& operator()(long L) const;

 private:
  std::string name_;
  std::vector<QSeries> values_;
};

// Sequences of the two new finite identities.
Sequence a_lhs(long L_max);  // left side of the first identity
Sequence a_rhs(long L_max);  // right side of the first identity
Sequence b_rhs(long L_max);  // right side of the second identity
Sequence c_lhs(long L_max);  // left side of the second identity
Sequence s1(long L_max);     // first double sum of c_L
Sequence s2(long L_max);     // second double sum of c_L

struct RecurrenceReport {
  std::string recurrence;
  std::string sequence;
  long L_lo = 0;
  long L_hi = 0;
  bool pass = true;
  std::optional<long> first_failing_L;
  /// The non-zero combination at the first failing L.
  QSeries residual;
};

/// Checks the recurrence for L_lo <= L <= L_hi, in parallel over L.
RecurrenceReport verify_recurrence(const Sequence& seq, const Recurrence& r, long L_lo, long L_hi);

struct CatalogEntry {
  Recurrence recurrence;
  std::string sequence;
  long L_lo;
  long L_hi;
  /// False for forms kept without the correction that are known not to hold.
  bool expected_to_hold;
};
/// Every (recurrence, sequence) pair with its default window of length >= 8.
std::vector<CatalogEntry> catalog(long L_hi = 12);

struct CatalogResult {
  CatalogEntry entry;
  RecurrenceReport report;
  /// Outcome matches expected_to_hold.
  bool as_expected() const { return report.pass == entry.expected_to_hold; }
};
std::vector<CatalogResult> verify_catalog(long L_hi = 12);

/// out(L)[i+k] = sum outer(L)[i] * inner(L-i)[k]: the recurrence obtained by
/// substituting r_L = sum_k inner(L)[k] s(L-k) into sum_i outer(L)[i] r(L-i) = 0.
std::vector<QSeries> compose(const Recurrence& outer, const Recurrence& inner, long L);

/// Relation between the residuals r_L of the short b-recurrence.
Recurrence witness_b();
/// Order-3 relation for c_L, corrected so that it expands to the order-5 recurrence.
Recurrence witness_c();
Recurrence witness_c_uncorrected();

struct WitnessReport {
  char which = 'b';
  bool residuals_vanish = true;   // r_L = 0 for every L checked
  bool relation_holds = true;     // the witness relation in r_L is zero
  bool expansion_matches = true;  // composed recurrence equals the long one
  std::optional<long> first_failing_L;
  std::optional<int> first_failing_lag;
  bool pass() const { return residuals_vanish && relation_holds && expansion_matches; }
};
/// which = 'b' (against the order-4 recurrence) or 'c' (against the order-5 one).
WitnessReport verify_factor_witness(char which, long L_lo, long L_hi, bool uncorrected = false);

struct InitialConditionReport {
  char which = 'b';
  /// Terms generated forward from two initial values by the short recurrence,
  /// compared with the long recurrence run from its own initial values.
  long L_checked = 0;
  bool pass = true;
  std::optional<long> first_failing_L;
};
/// Runs the short recurrence forward from s(0), s(1) and the long one from
/// s(0..order-1); both must reproduce s(L) up to L_hi. which in {a, b, c}.
InitialConditionReport verify_initial_condition_argument(char which, long L_hi = 10);

/// Runs a recurrence with leading coefficient 1 forward from the given values.
std::vector<QSeries> run_forward(const Recurrence& r, std::vector<QSeries> initial, long L_hi);

struct NegativeControl {
  std::string name;
  bool residual_nonzero;
};
/// Checks that the verifier rejects a constant sequence and perturbed recurrences.
std::vector<NegativeControl> negative_controls();

}  // namespace qcap::rec
