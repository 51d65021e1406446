#include <benchmark/benchmark.h>

#include <random>

#include "avecond/condnum.hpp"
#include "avecond/regularity.hpp"
#include "avecond/spectral.hpp"

namespace {

using avecond::Matrix;

Matrix diagonally_shifted(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n) + 2.0;
  return a;
}

void BM_CondExactInf(benchmark::State& state) {
  const Matrix a = diagonally_shifted(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        avecond::cond_exact(a, avecond::NormSpec::inf(), {}, avecond::RegularityCheck::Skip));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CondExactInf)->DenseRange(4, 12, 2);

void BM_CondExactTwo(benchmark::State& state) {
  const Matrix a = diagonally_shifted(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        avecond::cond_exact(a, avecond::NormSpec::two(), {}, avecond::RegularityCheck::Skip));
  }
}
BENCHMARK(BM_CondExactTwo)->DenseRange(4, 10, 2);

void BM_RegularityExact(benchmark::State& state) {
  const Matrix a = diagonally_shifted(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(avecond::regularity_exact(a));
}
BENCHMARK(BM_RegularityExact)->DenseRange(4, 14, 2);

void BM_SigmaMin(benchmark::State& state) {
  const Matrix a = diagonally_shifted(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(avecond::sigma_min(a));
}
BENCHMARK(BM_SigmaMin)->RangeMultiplier(2)->Range(4, 64);

void BM_ClosedFormsInf(benchmark::State& state) {
  const Matrix a = diagonally_shifted(static_cast<std::size_t>(state.range(0)), 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(avecond::cond_hmatrix_inf(a));
    benchmark::DoNotOptimize(avecond::cond_neumann_upper(a, avecond::NormSpec::inf()));
    benchmark::DoNotOptimize(avecond::cond_enclosure_inf(a));
  }
}
BENCHMARK(BM_ClosedFormsInf)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
