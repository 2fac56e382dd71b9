#include <benchmark/benchmark.h>

#include "totdk/spence.hpp"

namespace {

void BM_SpenceBruteForce(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(totdk::sum_j_aj_bruteforce(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpenceBruteForce)->RangeMultiplier(10)->Range(100, 10'000'000)->Complexity(benchmark::oN);

void BM_SpenceClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(totdk::spence_closed_form(n));
}
BENCHMARK(BM_SpenceClosedForm)->RangeMultiplier(1000)->Range(100, 1'000'000'000'000LL);

void BM_VerifyChain(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(totdk::verify_chain(n));
}
BENCHMARK(BM_VerifyChain)->Arg(30)->Arg(2310)->Arg(30030);

void BM_SDoubleSum(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(totdk::s_double_sum(n));
}
BENCHMARK(BM_SDoubleSum)->Arg(30)->Arg(30030)->Arg(510510);

}  // namespace

BENCHMARK_MAIN();
