#include <benchmark/benchmark.h>

#include "prismatic/dynamics.hpp"
#include "prismatic/prism.hpp"
#include "prismatic/resultant.hpp"
#include "prismatic/upoly.hpp"

using namespace prismatic;

namespace {

const FixtureSet& fixtures() {
  static FixtureSet fx{FixtureSet::locate(PRISMATIC_SOURCE_FIXTURES)};
  return fx;
}

void BM_MPolyMul(benchmark::State& state) {
  const MPoly& psi = fixtures().psi();
  MPoly psi_a = psi.derivative(0);
  for (auto _ : state) benchmark::DoNotOptimize(psi * psi_a);
}
BENCHMARK(BM_MPolyMul);

void BM_SylvesterSampledResultant(benchmark::State& state) {
  const MPoly& psi = fixtures().psi();
  MPoly psi_a = psi.derivative(0);
  MPoly p1 = psi.evaluate_partial({{0, Rat(5, 7)}, {1, Rat(2, 3)}, {3, Rat(1, 4)}});
  MPoly p2 = psi_a.evaluate_partial({{0, Rat(5, 7)}, {1, Rat(2, 3)}, {3, Rat(1, 4)}});
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p1, p2, 2));
}
BENCHMARK(BM_SylvesterSampledResultant);

void BM_SturmG(benchmark::State& state) {
  UPoly g = UPoly::from_mpoly(fixtures().g_a(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(sturm_count(g, Rat(0), Rat(2)));
}
BENCHMARK(BM_SturmG);

void BM_SceneBuild(benchmark::State& state) {
  PrismParamsT<QuadExt> p{QuadExt(Rat(5, 3)), QuadExt(Rat(2)), QuadExt(Rat(1, 2))};
  for (auto _ : state) benchmark::DoNotOptimize(build_scene(p));
}
BENCHMARK(BM_SceneBuild);

void BM_PhiStep(benchmark::State& state) {
  DynConfig cfg;
  cfg.prec = state.range(0);
  DynPoint start = DynPoint::from_rat(Rat(2), Rat(1), Rat(1, 3), cfg.prec);
  for (auto _ : state) benchmark::DoNotOptimize(phi_step(start, cfg, fixtures()));
}
BENCHMARK(BM_PhiStep)->Arg(128)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
