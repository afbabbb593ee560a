#include <benchmark/benchmark.h>

#include <numbers>

#include "patchant/circpatch.hpp"
#include "patchant/rectpatch.hpp"
#include "patchant/response.hpp"
#include "patchant/specfun.hpp"

using namespace patchant;

namespace {

SubstrateSpec duroid() {
  SubstrateSpec s;
  s.eps_r = 2.32;
  s.h = 0.8e-3;
  return s;
}

void BM_BesselSeries(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_j(1, x));
    x = x < 11.9 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselSeries);

void BM_BesselRecurrence(benchmark::State& state) {
  double x = 12.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_j(2, x));
    x = x < 29.5 ? x + 0.37 : 12.5;
  }
}
BENCHMARK(BM_BesselRecurrence);

void BM_JPrimeRoot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::jprime_first_root(1));
}
BENCHMARK(BM_JPrimeRoot);

void BM_SynthCirc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(circ::synth_circ(39e9, duroid(), circ::CircModel{}));
}
BENCHMARK(BM_SynthCirc);

void BM_AnalyzeCirc(benchmark::State& state) {
  const auto d = circ::synth_circ(39e9, duroid(), circ::CircModel{});
  for (auto _ : state) benchmark::DoNotOptimize(circ::analyze_circ(d, 39e9, circ::CircModel{}));
}
BENCHMARK(BM_AnalyzeCirc);

void BM_AnalyzeRect(benchmark::State& state) {
  SubstrateSpec s = duroid();
  s.eps_r = 4.7;
  const auto d = rect::synth_rect(39e9, s);
  for (auto _ : state) benchmark::DoNotOptimize(rect::analyze_rect(d, 39e9, rect::RectModel{}));
}
BENCHMARK(BM_AnalyzeRect);

void BM_Sweep(benchmark::State& state) {
  const auto d = circ::synth_circ(39e9, duroid(), circ::CircModel{});
  const auto m = response::resonator(d, circ::CircModel{});
  const response::SweepSpec spec{20e9, 60e9, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(response::extract_resonance(response::sweep(m, spec)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(401)->Arg(4001);

void BM_PatternCut(benchmark::State& state) {
  const auto d = circ::synth_circ(39e9, duroid(), circ::CircModel{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(circ::pattern_cut(d, 39e9, circ::Plane::E, std::numbers::pi / 720.0));
  }
}
BENCHMARK(BM_PatternCut);

}  // namespace

BENCHMARK_MAIN();
