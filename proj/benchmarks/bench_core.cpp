#include <benchmark/benchmark.h>

#include "critedge/graph6.hpp"
#include "critedge/patterns.hpp"
#include "critedge/spectral.hpp"
#include "critedge/verify.hpp"

using namespace critedge;

namespace {

void BM_SpectralRadiusTuran(benchmark::State& state) {
  const Graph g = turan(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadiusTuran)->Arg(8)->Arg(20)->Arg(62);

void BM_SpectralRadiusNearBipartite(benchmark::State& state) {
  const Graph g = turan(static_cast<int>(state.range(0)), 2).with_edge(0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadiusNearBipartite)->Arg(8)->Arg(62);

void BM_Booksize(benchmark::State& state) {
  const Graph g = turan(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(booksize(g));
}
BENCHMARK(BM_Booksize)->Arg(8)->Arg(62);

void BM_ContainsTheta(benchmark::State& state) {
  const Graph g = turan(static_cast<int>(state.range(0)), 2);
  const PatternSpec p = PatternSpec::theta123(3);
  for (auto _ : state) benchmark::DoNotOptimize(contains(g, p));
}
BENCHMARK(BM_ContainsTheta)->Arg(10)->Arg(30);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = theta({1, 2, n - 3});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = turan(62, 5);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(write_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

// Labeled graphs per second through a full scan at n = 6.
void BM_ScanThroughput(benchmark::State& state) {
  ScanOptions opts;
  opts.prefilters = state.range(0) != 0;
  std::uint64_t scanned = 0;
  for (auto _ : state) scanned += verify_booksize_corollary(6, 6.5, opts).scanned;
  state.counters["graphs/s"] = benchmark::Counter(static_cast<double>(scanned), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ScanThroughput)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
