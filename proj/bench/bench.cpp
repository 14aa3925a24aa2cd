// Serial reference kernels against their OpenMP twins.

#include "iboxes/batch.hpp"
#include "iboxes/random.hpp"
#include "iboxes/signed_word.hpp"

#include <benchmark/benchmark.h>

using namespace iboxes;

namespace {

SignedWord long_word(std::size_t length) {
  std::mt19937_64 rng(1);
  auto c = std::make_shared<const CartanMatrix>(finite_type_cartan('E', 8));
  return random_signed_word(c, length, rng);
}

void BM_SignedMatrixSerial(benchmark::State &state) {
  const auto w = long_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(b_matrix_signed(w));
}

void BM_SignedMatrixOmp(benchmark::State &state) {
  const auto w = long_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(b_matrix_signed_omp(w));
}

void BM_TrialsSerial(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_trials_serial(static_cast<std::size_t>(state.range(0)), 42));
}

void BM_TrialsParallel(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_trials_parallel(static_cast<std::size_t>(state.range(0)), 42));
}

} // namespace

BENCHMARK(BM_SignedMatrixSerial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_SignedMatrixOmp)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_TrialsSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
