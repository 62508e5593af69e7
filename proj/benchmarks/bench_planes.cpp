#include <benchmark/benchmark.h>

#include "ringplane/classify.hpp"
#include "ringplane/construct.hpp"
#include "ringplane/corpus.hpp"
#include "ringplane/plane.hpp"

using namespace ringplane;

static void BM_ConstructRing(benchmark::State& state, const char* spec) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_ring_spec(spec));
}
BENCHMARK_CAPTURE(BM_ConstructRing, zmod_256, "zmod:256");
BENCHMARK_CAPTURE(BM_ConstructRing, galois_16_4, "gr:2,2,2");
BENCHMARK_CAPTURE(BM_ConstructRing, matrix_2_gf2, "mat:2(gf:2)");
BENCHMARK_CAPTURE(BM_ConstructRing, eis_8, "eis:2,3,1,2,2,1,id[1]");

static void BM_BuildPlane(benchmark::State& state, const char* spec) {
  FiniteRing r = parse_ring_spec(spec);
  for (auto _ : state) benchmark::DoNotOptimize(build_plane(r));
}
BENCHMARK_CAPTURE(BM_BuildPlane, zmod_4, "zmod:4");
BENCHMARK_CAPTURE(BM_BuildPlane, zmod_9, "zmod:9");
BENCHMARK_CAPTURE(BM_BuildPlane, zmod_16, "zmod:16");
BENCHMARK_CAPTURE(BM_BuildPlane, matrix_2_gf2, "mat:2(gf:2)");
BENCHMARK_CAPTURE(BM_BuildPlane, twisted_16, "ts:4,2,frob^1");

static void BM_BuildPlaneParallel(benchmark::State& state) {
  FiniteRing r = zmod(16);
  PlaneOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_plane(r, opts));
}
BENCHMARK(BM_BuildPlaneParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_Classify(benchmark::State& state, const char* spec) {
  FiniteRing r = parse_ring_spec(spec);
  for (auto _ : state) benchmark::DoNotOptimize(classify_case(r));
}
BENCHMARK_CAPTURE(BM_Classify, galois_16_4, "gr:2,2,2");
BENCHMARK_CAPTURE(BM_Classify, matrix_2_gf2, "mat:2(gf:2)");
BENCHMARK_CAPTURE(BM_Classify, ixy_2_2, "ixy:2,2");

static void BM_IsoSearch(benchmark::State& state) {
  FiniteRing a = zmod(16), b = galois_ring(2, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_IsoSearch);

static void BM_TheoremBattery(benchmark::State& state, const char* spec) {
  RingPlane pl = build_plane(parse_ring_spec(spec));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorems(pl));
}
BENCHMARK_CAPTURE(BM_TheoremBattery, zmod_9, "zmod:9");
BENCHMARK_CAPTURE(BM_TheoremBattery, double_3, "double:3");

BENCHMARK_MAIN();
