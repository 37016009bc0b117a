#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcap/bailey.hpp"
#include "qcap/qseries.hpp"

// Hierarchies obtained by iterating the Bailey lemma on the finite Capparelli
// identities, and their L -> infinity limits.
namespace qcap::hier {

enum class Family {
  Cap1Binomial,    // seed: first base-q^3 binomial identity, a = 0
  Cap2Binomial,    // seed: second base-q^3 binomial identity, a = 1
  SumCapparelli,   // seed: sum of the two, a = 0
  Cap1,            // seed: first new finite identity, a = 0
  Cap2,            // seed: second new finite identity, a = 0
  Cap2Analogue,    // seed: second new finite identity with [2L+1, L-j], a = 1
  Double,          // seed: first new finite identity, first s steps twisted
};

struct FamilyInfo {
  Family family;
  const char* id;
  long base;
  int a;
};

const FamilyInfo& info(Family family);
const std::vector<Family>& all_families();
std::optional<Family> family_from_id(std::string_view id);

struct HierarchySpec {
  Family family = Family::Cap1;
  long f = 1;
  long s = 0;  // number of twisted steps, Double family only
};

/// Throws ParamOutOfRange unless f >= 1 and 0 <= s <= f (s = 0 outside Double).
void validate(const HierarchySpec& spec);

/// Left side of the seed identity at M.
QSeries seed_lhs(Family family, long M);
/// Alpha of the seed identity.
bailey::BaileyAlpha seed_alpha(Family family);

/// Explicit multi-sum over n_1..n_f with N_1 <= L.
QSeries multisum_lhs(const HierarchySpec& spec, long L);
/// The seed's left side pushed through f Bailey transforms.
QSeries generate_hierarchy_lhs(const HierarchySpec& spec, long L);
/// The seed alpha after f steps (and s twists).
bailey::BaileyAlpha generated_alpha(const HierarchySpec& spec);
/// Printed right side.
QSeries rhs(const HierarchySpec& spec, long L);

/// Truncated multi-sum of the L -> infinity limit.
QSeries limit_lhs(const HierarchySpec& spec, long N);
/// Printed product side of the limit.
QSeries limit_rhs(const HierarchySpec& spec, long N);
/// (q^3;q^3)_inf / (q;q)_inf, the f = 1 case of the Cap2 limit.
QSeries cap2_corollary_product(long N);

// Named checkpoints of the twisted chain.
QSeries first_application_lhs(long L);
QSeries first_application_rhs(long L);
QSeries after_k_transform_lhs(long L);
QSeries after_k_transform_rhs(long L);

/// f = nu(nu+3)/2, at which the Cap1Binomial limit equals the nu-hierarchy limit.
long corollary_depth(long nu);

}  // namespace qcap::hier
