#include <benchmark/benchmark.h>

#include "lasg/enumerate.hpp"

namespace {

void BM_EnumerateRaw(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto n = lasg::enumerate_models({order, false, {}, 1}, [](const lasg::Magma&) {});
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateRaw)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateUpToIso(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto n = lasg::enumerate_models({order, true, {}, 1}, [](const lasg::Magma&) {});
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateUpToIso)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  auto models = lasg::collect_models({4, true, {}, 1});
  for (auto _ : state) {
    for (const auto& m : models) benchmark::DoNotOptimize(lasg::canonical_form(m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(models.size()));
}
BENCHMARK(BM_CanonicalForm);

}  // namespace
