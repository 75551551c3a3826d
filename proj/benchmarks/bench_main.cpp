#include <benchmark/benchmark.h>

#include "bfact/apery.hpp"
#include "bfact/bhargava.hpp"
#include "bfact/conjectures.hpp"
#include "bfact/primes.hpp"

namespace {

using namespace bfact;

void BM_SieveUpto(benchmark::State& state) {
  const std::int64_t limit = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PrimeTable::sieve_upto(limit).count());
  }
}
BENCHMARK(BM_SieveUpto)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);

void BM_ConstellationMembers(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        constellation_members(ConstellationKind::PrimeQuadruplets, state.range(0)));
  }
}
BENCHMARK(BM_ConstellationMembers)->Arg(1 << 16)->Arg(1 << 20);

void BM_GreedyPOrdering(benchmark::State& state) {
  const auto twins =
      constellation_members(ConstellationKind::TwinPrimes, 1 << 20);
  const std::size_t k_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_p_ordering(twins, 2, k_max).exponents.size());
  }
}
BENCHMARK(BM_GreedyPOrdering)->Arg(8)->Arg(16)->Arg(32);

void BM_SetFactorial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ConstellationSet twins(ConstellationKind::TwinPrimes);
    benchmark::DoNotOptimize(set_factorial(twins, n).ok());
  }
}
BENCHMARK(BM_SetFactorial)->Arg(4)->Arg(12)->Arg(20);

void BM_PrimeFactorialClosed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prime_factorial_closed(n).factors().size());
  }
}
BENCHMARK(BM_PrimeFactorialClosed)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ConjectureScanC1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(ConjectureId::C1, 1, state.range(0)).verified);
  }
}
BENCHMARK(BM_ConjectureScanC1)->Arg(8)->Arg(16);

void BM_AperyRows(benchmark::State& state) {
  const std::uint64_t n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apery_rows(n_max).size());
  }
}
BENCHMARK(BM_AperyRows)->Arg(50)->Arg(150)->Arg(300);

void BM_NegativeRunScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(negative_run_scan(state.range(0)).negative);
  }
}
BENCHMARK(BM_NegativeRunScan)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
