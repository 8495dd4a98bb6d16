#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fintop/census.hpp"
#include "fintop/classify.hpp"
#include "fintop/counting.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/separation.hpp"

namespace {

using namespace fintop;

void BM_EnumerateTopologies(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_topology(n, [&](const FiniteSpace&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["topologies"] = static_cast<double>(count);
  state.counters["per_second"] = benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  CensusOptions options;
  options.workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(census(static_cast<std::size_t>(state.range(0)), options));
}
BENCHMARK(BM_Census)->Args({5, 1})->Args({6, 1})->Args({6, 0})->Unit(benchmark::kMillisecond);

void BM_AxiomProfile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<FiniteSpace> spaces;
  for (int i = 0; i < 64; ++i) {
    std::vector<PointSet> subbasis;
    for (int k = 0; k < 4; ++k) subbasis.push_back(PointSet(rng() & PointSet::full(n).bits()));
    spaces.push_back(generate_topology(n, subbasis));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(axiom_profile(spaces[i++ % spaces.size()]));
}
BENCHMARK(BM_AxiomProfile)->Arg(4)->Arg(7)->Arg(12);

void BM_SetPartitions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_set_partition(n, [&](std::span<const std::size_t>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SetPartitions)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BellNumber(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bell_number(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BellNumber)->Arg(14)->Arg(100)->Arg(500);

void BM_PartitionCount(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integer_partition_count(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_PartitionCount)->Arg(14)->Arg(1000)->Arg(10000);

void BM_FindHomeomorphism(benchmark::State& state) {
  // A fence 0 < 1 > 2 < 3 > ... and a relabeled copy.
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PointSet> subbasis;
  for (std::size_t x = 0; x + 1 < n; x += 2) subbasis.push_back(PointSet{x}.with(x + 1));
  for (std::size_t x = 2; x < n; x += 2) subbasis.push_back(PointSet{x}.with(x - 1));
  const FiniteSpace a = generate_topology(n, subbasis);
  std::vector<std::size_t> reversed(n);
  for (std::size_t x = 0; x < n; ++x) reversed[x] = n - 1 - x;
  const PointMap flip(n, reversed);
  std::vector<PointSet> opens;
  for (PointSet u : a.opens()) opens.push_back(flip.image(u));
  const FiniteSpace b = build_space(n, opens);
  for (auto _ : state) benchmark::DoNotOptimize(find_homeomorphism(a, b));
}
BENCHMARK(BM_FindHomeomorphism)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
