#include "chpos/chern.hpp"
#include "chpos/cones.hpp"
#include "chpos/schubert.hpp"
#include "chpos/slopes.hpp"
#include "report.hpp"

#include <benchmark/benchmark.h>

using namespace chpos;

static void BM_GrassmannianRing(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schubert::grassmannian_ring(k, 2 * k + 1));
}
BENCHMARK(BM_GrassmannianRing)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_BundleRing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(projective_bundle(SpaceSpec{ProjectiveSpaceSpec{n}}, {-2, -1, 0, 1}));
  }
}
BENCHMARK(BM_BundleRing)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_Multiply(benchmark::State& state) {
  const auto g = grassmannian(3, 7);
  const auto s1 = schubert::special_class(g->ring, 3, 7, 1);
  for (auto _ : state) benchmark::DoNotOptimize(power(s1, 12));
}
BENCHMARK(BM_Multiply);

static void BM_ClassifyCh2(benchmark::State& state) {
  const auto bl = blowup_linear(6, 2);
  const auto ch2 = ch_tangent(*bl).ch(2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(ch2, *bl));
}
BENCHMARK(BM_ClassifyCh2);

static void BM_Schedule(benchmark::State& state) {
  const slopes::SplitCurveBundle e({7, 3, 1, 0, -2});
  for (auto _ : state) benchmark::DoNotOptimize(slopes::epsilon_quotient_schedule(e, Rational(1, 37)));
}
BENCHMARK(BM_Schedule);

static void BM_SearchCi(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::search_ci(8, 3, 4, jobs));
}
BENCHMARK(BM_SearchCi)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SearchPbundle(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::search_pbundle(8, jobs));
}
BENCHMARK(BM_SearchPbundle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
