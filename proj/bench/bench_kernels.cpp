#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcap/kernels.hpp"
#include "qcap/qcombinat.hpp"
#include "qcap/qseries.hpp"

namespace {

using qcap::Int;

std::vector<Int> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::vector<Int> v(n);
  for (auto& c : v) c = dist(rng);
  return v;
}

template <auto Kernel>
void BM_convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  std::vector<Int> out(2 * n - 1);
  for (auto _ : state) {
    for (auto& c : out) c = 0;
    Kernel(a.data(), n, b.data(), n, out.data(), out.size());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}

template <auto Mul>
void BM_series_product(benchmark::State& state) {
  const long n = state.range(0);
  const auto a = qcap::q_binomial(2 * n, n), b = qcap::q_binomial(2 * n + 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
}

}  // namespace

BENCHMARK(BM_convolve<qcap::kernel::convolve_serial>)->Name("convolve_serial")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_convolve<qcap::kernel::convolve_parallel>)->Name("convolve_parallel")->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_series_product<qcap::mul_serial>)->Name("qbinomial_product_serial")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(BM_series_product<qcap::mul>)->Name("qbinomial_product_dispatch")->RangeMultiplier(2)->Range(16, 64);

BENCHMARK_MAIN();
