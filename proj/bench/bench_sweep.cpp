#include <benchmark/benchmark.h>

#include <omp.h>

#include "psl/enumeration.hpp"
#include "psl/sweep.hpp"

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    psl::SweepResult r = psl::sweep_serial(n);
    benchmark::DoNotOptimize(r.words);
  }
}

void BM_SweepParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    psl::SweepResult r = psl::sweep_parallel(n);
    benchmark::DoNotOptimize(r.words);
  }
  state.counters["threads"] = omp_get_max_threads();
}

void BM_CountSerial(benchmark::State& state) {
  psl::EnumerationOptions o;
  o.n = static_cast<int>(state.range(0));
  o.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(psl::count_simple(o));
}

void BM_CountParallel(benchmark::State& state) {
  psl::EnumerationOptions o;
  o.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl::count_simple(o));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_DedupParallel(benchmark::State& state) {
  psl::EnumerationOptions o;
  o.n = static_cast<int>(state.range(0));
  o.dedup = true;
  for (auto _ : state) benchmark::DoNotOptimize(psl::enumerate_simple(o).size());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(6)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_SweepParallel)->Arg(6)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_CountSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DedupParallel)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
