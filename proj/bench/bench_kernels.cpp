// Serial reference kernels against their OpenMP versions on the workloads
// the distance certificates actually run.

#include <benchmark/benchmark.h>

#include "constamax/blockcodes.hpp"
#include "constamax/kernels.hpp"

using namespace constamax;
using namespace constamax::kernels;

namespace {

MatrixQ parity(uint64_t q, uint64_t r, int64_t i) {
  auto t = family_tower(BlockFamily::ClassI, q, r);
  return parity_check_matrix(build_family(BlockFamily::ClassI, t, i));
}

MatrixQ generator(uint64_t q, uint64_t r, int64_t i) {
  auto t = family_tower(BlockFamily::ClassI, q, r);
  return generator_matrix(build_family(BlockFamily::ClassI, t, i));
}

template <bool Omp>
void BM_subset_all_independent(benchmark::State& state) {
  // [26, 17, 10]_25: every 9-subset of the parity-check columns
  const auto H = parity(25, 6, 4);
  for (auto _ : state) {
    auto r = Omp ? subset_search_omp(H, H.rows(), SubsetMode::AnyOfSize, UINT64_MAX)
                 : subset_search_serial(H, H.rows(), SubsetMode::AnyOfSize, UINT64_MAX);
    benchmark::DoNotOptimize(r.found);
  }
}

template <bool Omp>
void BM_min_dependent(benchmark::State& state) {
  const auto H = parity(11, 5, 3);
  for (auto _ : state) {
    auto r = Omp ? subset_search_omp(H, H.rows(), SubsetMode::MinDependent, UINT64_MAX)
                 : subset_search_serial(H, H.rows(), SubsetMode::MinDependent, UINT64_MAX);
    benchmark::DoNotOptimize(r.found);
  }
}

template <bool Omp>
void BM_enumerate(benchmark::State& state) {
  // dual of [12, 7, 6]_11 has 11^5 words
  const auto G = parity(11, 5, 2);
  for (auto _ : state) {
    auto r = Omp ? min_weight_omp(G, 0, UINT64_MAX) : min_weight_serial(G, 0, UINT64_MAX);
    benchmark::DoNotOptimize(r.min_weight);
  }
}

template <bool Omp>
void BM_enumerate_relative(benchmark::State& state) {
  const auto G = generator(9, 4, 2);  // [10, 5]_9, skip the first row
  for (auto _ : state) {
    auto r = Omp ? min_weight_omp(G, 1, UINT64_MAX) : min_weight_serial(G, 1, UINT64_MAX);
    benchmark::DoNotOptimize(r.min_weight);
  }
}

}  // namespace

BENCHMARK(BM_subset_all_independent<false>)->Name("subset_any/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subset_all_independent<true>)->Name("subset_any/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_dependent<false>)->Name("min_dependent/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_dependent<true>)->Name("min_dependent/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate<false>)->Name("enumerate/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate<true>)->Name("enumerate/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_relative<false>)->Name("enumerate_relative/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_relative<true>)->Name("enumerate_relative/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
