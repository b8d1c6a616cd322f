// Serial reference path vs OpenMP-parallel kernels for |Solv(G)|.
//
//   ./build/bench/bench_solv --benchmark_filter=Rational

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "solvkit/families.hpp"
#include "solvkit/solvabilizer.hpp"

namespace {

using namespace solvkit;

const char* const kGroups[] = {"a:5", "psl2:7", "psl2:8", "psl2:11", "psl2:13", "psl3:3"};

const GroupTable& group(std::size_t index) {
  static std::map<std::size_t, std::unique_ptr<GroupTable>> cache;
  auto& slot = cache[index];
  if (!slot) slot = std::make_unique<GroupTable>(named_group(kGroups[index]));
  return *slot;
}

SolvOptions options(Execution e) {
  SolvOptions o;
  o.execution = e;
  return o;
}

template <Execution E>
void BM_Rational(benchmark::State& state) {
  const auto& g = group(static_cast<std::size_t>(state.range(0)));
  state.SetLabel(kGroups[state.range(0)]);
  std::uint64_t total = 0;
  for (auto _ : state) total = solv_count_rational(g, options(E)).total;
  state.counters["solv"] = static_cast<double>(total);
}

template <Execution E>
void BM_Naive(benchmark::State& state) {
  const auto& g = group(static_cast<std::size_t>(state.range(0)));
  state.SetLabel(kGroups[state.range(0)]);
  std::uint64_t total = 0;
  for (auto _ : state) total = solv_count_naive(g, options(E)).total;
  state.counters["solv"] = static_cast<double>(total);
}

BENCHMARK(BM_Rational<Execution::serial>)->Name("Rational/serial")->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rational<Execution::parallel>)->Name("Rational/parallel")->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Naive<Execution::serial>)->Name("Naive/serial")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Naive<Execution::parallel>)->Name("Naive/parallel")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
