#include <benchmark/benchmark.h>

#include "orbicoh/builtins.hpp"
#include "orbicoh/charfun.hpp"
#include "orbicoh/cohomology.hpp"

using namespace orbicoh;

namespace {

void BM_MuTablePrism(benchmark::State& state) {
  auto pair = reference_pair(PosetClass::Prism, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_table(pair.poset, pair.v));
  state.counters["faces"] = static_cast<double>(pair.poset.size());
}
BENCHMARK(BM_MuTablePrism)->DenseRange(2, 6);

void BM_MuTableCounterexample(benchmark::State& state) {
  auto dual = fan_to_pair(counterexample_fan(Integer(state.range(0))).fan);
  for (auto _ : state) benchmark::DoNotOptimize(mu_table(dual.poset, dual.v));
}
BENCHMARK(BM_MuTableCounterexample)->Arg(2)->Arg(7);

void BM_Analyze(benchmark::State& state) {
  auto dual = fan_to_pair(counterexample_fan(Integer(5)).fan);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(dual.poset, dual.v, dual.flags));
}
BENCHMARK(BM_Analyze);

void BM_Classify(benchmark::State& state) {
  auto p = reference_poset(PosetClass::Prism, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_Classify)->DenseRange(2, 5);

}  // namespace
