#include <benchmark/benchmark.h>

#include "grv/verifier.hpp"

namespace {

void BM_VerifyAllSerial(benchmark::State& state) {
  const grv::ToleranceConfig tol;
  for (auto _ : state) {
    auto report = grv::verify_all_serial(42, static_cast<int>(state.range(0)), tol);
    benchmark::DoNotOptimize(report.summary.pass);
  }
}

void BM_VerifyAllParallel(benchmark::State& state) {
  const grv::ToleranceConfig tol;
  for (auto _ : state) {
    auto report = grv::verify_all(42, static_cast<int>(state.range(0)), tol);
    benchmark::DoNotOptimize(report.summary.pass);
  }
}

}  // namespace

BENCHMARK(BM_VerifyAllSerial)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAllParallel)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
