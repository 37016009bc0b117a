#pragma once

#include <vector>

namespace qcap::detail {

// Visits every tuple (n_1, ..., n_f) of non-negative integers together with the
// tail sums N_k = n_k + ... + n_f. Indices are chosen from n_f outwards; keep(N_k,
// sum_{l>=k} N_l, sum_{l>=k} N_l^2) must be monotone in n_k and prunes the search.
template <typename Keep, typename Visit>
void for_each_tail_composition(long f, Keep keep, Visit visit) {
  std::vector<long> n(static_cast<std::size_t>(f)), N(static_cast<std::size_t>(f));
  auto rec = [&](auto&& self, long k, long tail, long sum, long sumsq) -> void {
    if (k < 0) {
      visit(n, N);
      return;
    }
    for (long v = 0;; ++v) {
      const long Nk = tail + v;
      if (!keep(Nk, sum + Nk, sumsq + Nk * Nk)) break;
      n[static_cast<std::size_t>(k)] = v;
      N[static_cast<std::size_t>(k)] = Nk;
      self(self, k - 1, Nk, sum + Nk, sumsq + Nk * Nk);
    }
  };
  rec(rec, f - 1, 0, 0, 0);
}

}  // namespace qcap::detail
