#include <benchmark/benchmark.h>

#include "p4kit/cohomology.hpp"
#include "p4kit/construct.hpp"
#include "p4kit/groebner.hpp"
#include "p4kit/idealops.hpp"

using namespace p4kit;

namespace {

// The elliptic surface of a fixed monad run.
const Ideal& surface_ideal() {
  static const Ideal ix = [] {
    PipelineOptions o;
    o.bridge = false;
    return *monad_pipeline(o).ix;
  }();
  return ix;
}

void BM_GroebnerRandomQuartics(benchmark::State& state) {
  RingPtr ring = make_ring();
  Rng rng(11);
  std::vector<Polynomial> gens;
  for (int i = 0; i < state.range(0); ++i) gens.push_back(random_form(ring, 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_GroebnerRandomQuartics)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GroebnerWorkers(benchmark::State& state) {
  RingPtr ring = make_ring();
  Rng rng(12);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(random_form(ring, 4, rng));
  set_worker_count(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
  set_worker_count(1);
}
BENCHMARK(BM_GroebnerWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ResolutionM(benchmark::State& state) {
  RingPtr ring = make_ring();
  GradedModule m = build_M(ring);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_free_resolution(m));
}
BENCHMARK(BM_ResolutionM)->Unit(benchmark::kMillisecond);

void BM_ResolutionN(benchmark::State& state) {
  RingPtr ring = make_ring();
  GradedModule n = build_N(ring);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_free_resolution(n));
}
BENCHMARK(BM_ResolutionN)->Unit(benchmark::kMillisecond);

void BM_Saturate(benchmark::State& state) {
  const Ideal& ix = surface_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(saturate(Ideal(ix.ring(), ix.basis_in_degree(5))));
}
BENCHMARK(BM_Saturate)->Unit(benchmark::kMillisecond);

void BM_CohomologyTable(benchmark::State& state) {
  const Ideal& ix = surface_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_table(ix, -1, 3));
}
BENCHMARK(BM_CohomologyTable)->Unit(benchmark::kMillisecond);

void BM_Smoothness(benchmark::State& state) {
  const Ideal& ix = surface_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_certificate(ix, 2));
}
BENCHMARK(BM_Smoothness)->Unit(benchmark::kMillisecond);

void BM_MonadPipeline(benchmark::State& state) {
  PipelineOptions o;
  o.bridge = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(monad_pipeline(o));
}
BENCHMARK(BM_MonadPipeline)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
