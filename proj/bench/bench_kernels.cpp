// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "catalg/categories.hpp"
#include "catalg/enumeration.hpp"
#include "catalg/invariants.hpp"
#include "catalg/presentations.hpp"

namespace {

using namespace catalg;

void BM_DepthParallel(benchmark::State& state) {
  const auto cat = build_category(CategoryKind::EO, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(composition_depth(cat));
}

void BM_DepthSerial(benchmark::State& state) {
  const auto cat = build_category(CategoryKind::EO, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::composition_depth(cat));
}

template <CategoryKind Kind>
void BM_ClosureParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cat = build(Kind, n);
  const auto q = presentation_quiver(cat);
  const auto rels = relations(Kind, n);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_closure(q, rels));
}

template <CategoryKind Kind>
void BM_ClosureSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cat = build(Kind, n);
  const auto q = presentation_quiver(cat);
  const auto rels = relations(Kind, n);
  for (auto _ : state) benchmark::DoNotOptimize(serial::congruence_closure(q, rels));
}

void BM_CartanECParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cartan_ec_closed(static_cast<int>(state.range(0))));
}

void BM_CartanECSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::cartan_ec_closed(static_cast<int>(state.range(0))));
}

void BM_CartanEFParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cartan_ef_closed(static_cast<int>(state.range(0))));
}

void BM_CartanEFSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::cartan_ef_closed(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_DepthParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DepthSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel<CategoryKind::EC>)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial<CategoryKind::EC>)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel<CategoryKind::EF>)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial<CategoryKind::EF>)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel<CategoryKind::SEO>)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureSerial<CategoryKind::SEO>)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CartanECParallel)->DenseRange(4, 7);
BENCHMARK(BM_CartanECSerial)->DenseRange(4, 7);
BENCHMARK(BM_CartanEFParallel)->DenseRange(4, 7);
BENCHMARK(BM_CartanEFSerial)->DenseRange(4, 7);

BENCHMARK_MAIN();
