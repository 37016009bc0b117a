#include "qcap/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace qcap::kernel {

namespace {
std::atomic<std::size_t> g_threshold{1u << 14};
}

std::size_t parallel_threshold() { return g_threshold.load(std::memory_order_relaxed); }

void set_parallel_threshold(std::size_t work) {
  g_threshold.store(work, std::memory_order_relaxed);
}

void convolve_serial(const Int* a, std::size_t na, const Int* b, std::size_t nb, Int* out,
                     std::size_t nout) {
  for (std::size_t i = 0; i < na && i < nout; ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t jmax = std::min(nb, nout - i);
    for (std::size_t j = 0; j < jmax; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

void convolve_parallel(const Int* a, std::size_t na, const Int* b, std::size_t nb, Int* out,
                       std::size_t nout) {
  const long n = static_cast<long>(std::min(nout, na + nb - 1));
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < n; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const std::size_t ilo = ku >= nb ? ku - nb + 1 : 0;
    const std::size_t ihi = std::min(ku, na - 1);
    mpz_ptr acc = out[ku].get_mpz_t();
    for (std::size_t i = ilo; i <= ihi; ++i)
      mpz_addmul(acc, a[i].get_mpz_t(), b[ku - i].get_mpz_t());
  }
}

void convolve(const Int* a, std::size_t na, const Int* b, std::size_t nb, Int* out,
              std::size_t nout) {
  if (na == 0 || nb == 0 || nout == 0) return;
  const bool big = na * nb >= parallel_threshold();
  if (big && !omp_in_parallel() && omp_get_max_threads() > 1)
    convolve_parallel(a, na, b, nb, out, nout);
  else
    convolve_serial(a, na, b, nb, out, nout);
}

}  // namespace qcap::kernel
