#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "isosquare/constructions.hpp"
#include "isosquare/digits.hpp"
#include "isosquare/enumeration.hpp"
#include "isosquare/membership.hpp"

namespace {

void BM_SieveSequential(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isosquare::sieve_sequential(limit));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * limit));
}
BENCHMARK(BM_SieveSequential)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

// crosses the u64/u128 boundary
void BM_MembershipWide(benchmark::State& state) {
  std::uint64_t n = (std::uint64_t{1} << 40) + 12345;
  for (auto _ : state) benchmark::DoNotOptimize(isosquare::is_isosquare(n++));
}
BENCHMARK(BM_MembershipWide);

void BM_HammingWeightNatural(benchmark::State& state) {
  std::mt19937_64 rng(7);
  isosquare::Natural n = 0;
  for (std::int64_t i = 0; i < state.range(0) / 64; ++i) n = (n << 64) | rng();
  for (auto _ : state) benchmark::DoNotOptimize(isosquare::hamming_weight(n));
}
BENCHMARK(BM_HammingWeightNatural)->Arg(256)->Arg(4096)->Arg(1 << 20);

void BM_ConstructOne(benchmark::State& state) {
  const isosquare::Natural seed = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isosquare::construct_one(seed));
}
BENCHMARK(BM_ConstructOne)->Arg(5)->Arg(1001)->Arg(1'000'001);

void BM_ConstructFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(isosquare::construct_family(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ConstructFamily)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
