#include <benchmark/benchmark.h>

#include "gjms/compositions.hpp"
#include "gjms/mcal.hpp"
#include "gjms/qcurvature.hpp"
#include "gjms/residue.hpp"

namespace {

void BM_CoefficientTable(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::coefficient_table(N));
}
BENCHMARK(BM_CoefficientTable)->DenseRange(4, 12, 4);

void BM_BuildM(benchmark::State& state) {
  const auto space = gjms::ModelSpace::sphere();
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::build_M(space, N));
}
BENCHMARK(BM_BuildM)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildMByEnumeration(benchmark::State& state) {
  const auto space = gjms::ModelSpace::sphere();
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::build_M_by_enumeration(space, N));
}
BENCHMARK(BM_BuildMByEnumeration)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_BuildMProduct(benchmark::State& state) {
  const auto space = gjms::ModelSpace::pseudo_sphere();
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::build_M(space, N));
}
BENCHMARK(BM_BuildMProduct)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_VolumeSeries(benchmark::State& state) {
  const auto K = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::volume_series(gjms::ModelSpace::sphere(), K));
}
BENCHMARK(BM_VolumeSeries)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ResiduePoly(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gjms::residue_poly(gjms::ModelSpace::sphere(), N));
}
BENCHMARK(BM_ResiduePoly)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
