#pragma once

#include <cstddef>

#include "qcap/qseries.hpp"

namespace qcap::kernel {

// out[k] += sum_{i+j=k} a[i]*b[j] for 0 <= k < nout.

void convolve_serial(const Int* a, std::size_t na, const Int* b, std::size_t nb, Int* out,
                     std::size_t nout);

// One OpenMP task per output block; each output coefficient is owned by one thread.
void convolve_parallel(const Int* a, std::size_t na, const Int* b, std::size_t nb, Int* out,
                       std::size_t nout);

// Picks the parallel kernel for large products outside an enclosing parallel region.
void convolve(const Int* a, std::size_t na, const Int* b, std::size_t nb, Int* out,
              std::size_t nout);

// Work size (na*nb) from which convolve() goes parallel.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t work);

}  // namespace qcap::kernel
