// Microbenchmarks for the hot construction and verification paths.

#include <benchmark/benchmark.h>

#include <numbers>

#include "quadriclab/contact_curvature.hpp"
#include "quadriclab/hypersurfaces.hpp"
#include "quadriclab/lie_core.hpp"
#include "quadriclab/quadric_geometry.hpp"
#include "quadriclab/root_system.hpp"

using namespace qlab;

namespace {

void BM_Bracket(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = standard_basis(n);
  const SoElement& x = basis.front();
  const SoElement& y = basis.back();
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}

void BM_Curvature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = p_frame(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(curvature(p[0], p[1], p[2]));
}

void BM_JacobiSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto v = v_c0_frame(n);
  const SoElement vec = (v[0] + j_apply(v[1])) * (1.0 / std::numbers::sqrt2);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_spectrum(vec));
}

void BM_RootSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(n));
}

void BM_BuildModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RootSystem rs(n);
  const HypersurfaceModel m = HypersurfaceModel::tube(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_M(rs, m));
}

void BM_Ricci(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RootSystem rs(n);
  const BuiltModel built = build_M(rs, HypersurfaceModel::tube(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(ricci(built));
}

} // namespace

BENCHMARK(BM_Bracket)->Arg(4)->Arg(8);
BENCHMARK(BM_Curvature)->Arg(4)->Arg(8);
BENCHMARK(BM_JacobiSpectrum)->Arg(4)->Arg(8);
BENCHMARK(BM_RootSystem)->Arg(4)->Arg(8);
BENCHMARK(BM_BuildModel)->Arg(4)->Arg(8);
BENCHMARK(BM_Ricci)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
