#include <benchmark/benchmark.h>

#include "k3scroll/classify.hpp"
#include "k3scroll/resolution.hpp"

using namespace k3s;

static void BM_EnumerateClasses(benchmark::State& state) {
  auto lat = std::make_shared<Lattice>(
      IMat{{0, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}});
  DivisorClass h(lat, {5, 3, 2, 1});
  for (auto _ : state) {
    auto v = enumerate_classes(lat, h, -2, 0, 18);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EnumerateClasses);

static void BM_SectionCount(benchmark::State& state) {
  ScrollType st({3, 2, 2, 1, 1, 1});
  for (auto _ : state) {
    i64 v = h0_scroll(st, 4, -9);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_SectionCount);

static void BM_BettiFiber(benchmark::State& state) {
  for (auto _ : state) {
    auto t = betti_fiber(3, 4);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BettiFiber);

static void BM_ClassifyAll(benchmark::State& state) {
  const std::string dir = default_data_dir();
  for (auto _ : state) {
    auto rep = regenerate_tables(dir, 5, 10);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ClassifyAll);

BENCHMARK_MAIN();
