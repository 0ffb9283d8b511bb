#include <benchmark/benchmark.h>

#include "hilbtan/conjecture.hpp"
#include "hilbtan/families.hpp"
#include "hilbtan/hull.hpp"
#include "hilbtan/search.hpp"
#include "hilbtan/tangent.hpp"

namespace {

using namespace hilbtan;

// Family members indexed by k, the graded engine against the dense oracle.
void BM_TangentGraded(benchmark::State& state) {
  const auto ideal = family_ideal({FamilyTag::T1, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(tangent_dimension(ideal).dimension);
  state.counters["colength"] = static_cast<double>(colength(ideal));
}
BENCHMARK(BM_TangentGraded)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_TangentDense(benchmark::State& state) {
  const auto ideal = family_ideal({FamilyTag::T1, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(tangent_dimension_dense(ideal));
  state.counters["colength"] = static_cast<double>(colength(ideal));
}
BENCHMARK(BM_TangentDense)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);

void BM_Hull(benchmark::State& state) {
  const auto ideal = family_ideal({FamilyTag::T3, state.range(0)});
  for (auto _ : state) {
    const auto h = convex_hull(ideal.generators());
    benchmark::DoNotOptimize(boundary_lattice_points(h, Side::both).size());
  }
  state.counters["generators"] = static_cast<double>(ideal.size());
}
BENCHMARK(BM_Hull)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

void BM_BoundarySearch(benchmark::State& state) {
  const Exponent k = static_cast<Exponent>(state.range(0));
  BoundarySearchOptions options;
  options.colength = predicted_colength({FamilyTag::T6, k});
  for (auto _ : state) benchmark::DoNotOptimize(max_boundary_count({k, k + 1, k + 1}, Side::lower, options).count);
}
BENCHMARK(BM_BoundarySearch)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BoundarySearchBorel(benchmark::State& state) {
  const Exponent k = static_cast<Exponent>(state.range(0));
  BoundarySearchOptions options;
  options.borel_only = true;
  options.colength = predicted_colength({FamilyTag::T6, k});
  for (auto _ : state) benchmark::DoNotOptimize(max_boundary_count({k, k + 1, k + 1}, Side::both, options).count);
}
BENCHMARK(BM_BoundarySearchBorel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t seen = 0;
    enumerate_ideals(state.range(0), [&](const MonomialIdeal&) {
      ++seen;
      return true;
    });
    benchmark::DoNotOptimize(seen);
  }
  state.counters["ideals"] = static_cast<double>(count_ideals(state.range(0)));
}
BENCHMARK(BM_Enumerate)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_MaxTangent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_tangent(state.range(0)).max_tangent);
}
BENCHMARK(BM_MaxTangent)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
