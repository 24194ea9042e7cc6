#include <benchmark/benchmark.h>

#include "orthoiir/iir.hpp"
#include "orthoiir/legendre.hpp"
#include "orthoiir/response.hpp"

namespace {

using namespace orthoiir;

const FilterSpec& Lp() {
  static const FilterSpec spec = LowPassSpec(2.0007, 2.3186, 1000.0, 0.0);
  return spec;
}

const PoleZeroModel& Model() {
  static const PoleZeroModel model =
      Design(Lp(), HpLpComplement(Lp(), 1.0, 2.0), 20, 20, FilterKind::kLowPass).model_stable;
  return model;
}

void BM_Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(Model(), n));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SweepSerial(Model(), n));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_Project(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  const ObjectFunction obj = BuildObjectFunction(Lp());
  for (auto _ : state) benchmark::DoNotOptimize(Project(obj.function, terms, DefaultQuadOrder(terms)));
}

void BM_ProjectSerial(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  const ObjectFunction obj = BuildObjectFunction(Lp());
  for (auto _ : state) benchmark::DoNotOptimize(ProjectSerial(obj.function, terms, DefaultQuadOrder(terms)));
}

void BM_Design(benchmark::State& state) {
  const FilterSpec hp = HpLpComplement(Lp(), 1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(Design(Lp(), hp, 20, 20, FilterKind::kLowPass));
}

BENCHMARK(BM_Sweep)->Arg(2048)->Arg(65536);
BENCHMARK(BM_SweepSerial)->Arg(2048)->Arg(65536);
BENCHMARK(BM_Project)->Arg(20)->Arg(100);
BENCHMARK(BM_ProjectSerial)->Arg(20)->Arg(100);
BENCHMARK(BM_Design)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
