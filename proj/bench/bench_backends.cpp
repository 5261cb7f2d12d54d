// Serial reference vs OpenMP for the data-parallel kernels. Run with
// AZTEC_THREADS or --threads-style env to vary the worker count.

#include <benchmark/benchmark.h>

#include "aztec/exact.hpp"
#include "aztec/shuffle.hpp"
#include "aztec/stats.hpp"

namespace {

aztec::Backend backend_of(const benchmark::State& st) {
  return st.range(1) == 0 ? aztec::Backend::serial : aztec::Backend::openmp;
}

void label(benchmark::State& st) { st.SetLabel(std::string(aztec::backend_name(backend_of(st)))); }

void BM_KrawtchoukTable(benchmark::State& st) {
  for (auto _ : st) {
    aztec::exact::KrawtchoukTable t(1, 1);
    t.build(st.range(0), backend_of(st));
    benchmark::DoNotOptimize(t.at(0, 0));
  }
  label(st);
}

void BM_PlacementGrid(benchmark::State& st) {
  for (auto _ : st) {
    aztec::exact::PlacementGrid g(st.range(0), backend_of(st));
    benchmark::DoNotOptimize(g.numerator(0, st.range(0) % 2 == 0 ? -1 : 0));
  }
  label(st);
}

void BM_Shuffle(benchmark::State& st) {
  std::uint64_t seed = 1;
  for (auto _ : st) {
    aztec::shuffle::ShuffleOptions opts;
    opts.backend = backend_of(st);
    auto s = aztec::shuffle::run(st.range(0), aztec::exact::BiasValue::uniform(), seed++, opts);
    benchmark::DoNotOptimize(s.order());
  }
  label(st);
}

void BM_EmpiricalPlacement(benchmark::State& st) {
  for (auto _ : st) {
    auto g = aztec::stats::empirical_placement(st.range(0), {}, 64, 7, backend_of(st));
    benchmark::DoNotOptimize(g.samples());
  }
  label(st);
}

}  // namespace

BENCHMARK(BM_KrawtchoukTable)->ArgsProduct({{200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlacementGrid)->ArgsProduct({{100, 200}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Shuffle)->ArgsProduct({{128, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmpiricalPlacement)->ArgsProduct({{32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
