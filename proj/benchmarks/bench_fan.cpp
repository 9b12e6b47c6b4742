#include <benchmark/benchmark.h>

#include "orbicoh/builtins.hpp"
#include "orbicoh/fan.hpp"

using namespace orbicoh;

namespace {

void BM_CompletenessSampling(benchmark::State& state) {
  auto fan = counterexample_fan(Integer(3)).fan;
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(completeness_check(fan, trials, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_CompletenessSampling)->Arg(1000)->Arg(10000);

void BM_FanToPair(benchmark::State& state) {
  auto fan = counterexample_fan(Integer(3)).fan;
  for (auto _ : state) benchmark::DoNotOptimize(fan_to_pair(fan));
}
BENCHMARK(BM_FanToPair);

}  // namespace
