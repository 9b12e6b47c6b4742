#include <benchmark/benchmark.h>

#include <random>

#include "orbicoh/lattice.hpp"

using namespace orbicoh;

namespace {

IntMatrix random_matrix(std::size_t n, long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, 9, 42);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 12, 2);

void BM_WedgeSquareQuotient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(n, 5, 7);
  std::vector<IntVector> vectors;
  for (std::size_t c = 0; c < n; ++c) vectors.push_back(m.column(c));
  for (auto _ : state) benchmark::DoNotOptimize(wedge_square_quotient(n, vectors));
}
BENCHMARK(BM_WedgeSquareQuotient)->DenseRange(2, 8, 2);

}  // namespace
