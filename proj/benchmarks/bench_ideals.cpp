#include <benchmark/benchmark.h>

#include "lasg/enumerate.hpp"
#include "lasg/ideals.hpp"
#include "lasg/theorems.hpp"

namespace {

// Additive group Z_n with a * b = b - a is left invertive; used as a
// scalable input for the 2^n subset scans.
lasg::Magma cyclic(std::size_t n) {
  std::vector<lasg::ElemId> cells;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cells.push_back(lasg::elem((b + n - a) % n));
  return lasg::Magma::with_default_labels(n, cells);
}

void BM_EnumerateKind(benchmark::State& state) {
  const auto m = cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (auto k : lasg::all_ideal_kinds) benchmark::DoNotOptimize(lasg::enumerate_kind(m, k));
  }
}
BENCHMARK(BM_EnumerateKind)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

void BM_RunAllOrder4(benchmark::State& state) {
  auto models = lasg::collect_models({4, true, {}, 1});
  for (auto _ : state) {
    for (const auto& m : models) benchmark::DoNotOptimize(lasg::run_all(m));
  }
}
BENCHMARK(BM_RunAllOrder4)->Unit(benchmark::kMillisecond);

}  // namespace
