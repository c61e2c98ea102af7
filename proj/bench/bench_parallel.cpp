#include <benchmark/benchmark.h>

#include <random>

#include "aci3/gorenstein.hpp"
#include "aci3/oracle/fp.hpp"
#include "aci3/sweep.hpp"

using namespace aci3;
using aci3::oracle::Execution;

namespace {

oracle::FpMatrix random_matrix(std::size_t rows, std::size_t cols) {
  const oracle::PrimeField f;
  std::mt19937_64 rng(rows * 7919 + cols);
  oracle::FpMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<oracle::Fp>(rng() % f.p());
  return m;
}

void rref_bench(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const oracle::PrimeField f;
  const auto base = random_matrix(n, n + n / 2);
  for (auto _ : state) {
    auto m = base;
    benchmark::DoNotOptimize(oracle::rref(m, f, exec));
  }
}

void BM_RrefSerial(benchmark::State& s) { rref_bench(s, Execution::Serial); }
void BM_RrefParallel(benchmark::State& s) { rref_bench(s, Execution::Parallel); }

void sweep_bench(benchmark::State& state, Execution exec) {
  const SweepParams params{static_cast<SweepKind>(state.range(0)), static_cast<int>(state.range(1)),
                           std::nullopt};
  const ClosedFormMinProvider ci;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(params, ci, exec));
}

void BM_SweepSerial(benchmark::State& s) { sweep_bench(s, Execution::Serial); }
void BM_SweepParallel(benchmark::State& s) { sweep_bench(s, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Args({0, 6})->Args({1, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({0, 6})->Args({1, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
