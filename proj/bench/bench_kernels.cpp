// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "brokencycle/consheaf.hpp"
#include "brokencycle/linalg.hpp"
#include "brokencycle/preord.hpp"

namespace {

bc::Matrix bench_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  return bc::random_matrix(bc::Field(101), n, n, rng);
}

void BM_RowReduceSerial(benchmark::State& state) {
  bc::Matrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bc::row_reduce_serial(m));
}

void BM_RowReduceParallel(benchmark::State& state) {
  bc::Matrix m = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bc::row_reduce(m));
}

struct SweepInput {
  bc::StratSheaf sheaf;
  std::vector<bc::UpSet> upsets;
};

SweepInput sweep_input(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  bc::StratSheaf f = bc::random_sheaf(bc::ParaPreorder::simplex(n), bc::Field(101), 4, rng);
  auto upsets = bc::enumerate_upsets(f.poset());
  return {std::move(f), std::move(upsets)};
}

void BM_GluingSweepSerial(benchmark::State& state) {
  SweepInput in = sweep_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bc::gluing_sweep_serial(in.sheaf, in.upsets));
}

void BM_GluingSweepParallel(benchmark::State& state) {
  SweepInput in = sweep_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bc::gluing_sweep(in.sheaf, in.upsets));
}

}  // namespace

BENCHMARK(BM_RowReduceSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduceParallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluingSweepSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluingSweepParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
