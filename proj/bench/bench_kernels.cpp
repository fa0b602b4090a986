// Serial reference vs OpenMP path for the two parallel kernels: the mapping
// search over spatial unrollings and the design-point sweep.

#include <benchmark/benchmark.h>

#include "imcsim/config.hpp"
#include "imcsim/parallel.hpp"
#include "imcsim/sweep.hpp"
#include "imcsim/system_model.hpp"

namespace {

using namespace imcsim;

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_MappingSearch(benchmark::State& state) {
  const SystemConfig sys = ProjectConfig{}.system(ImcType::Aimc, 1024);
  const Layer conv = fixtures::conv_resnet8();
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_mapping(sys, conv, Objective::Edp, exec_of(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_MappingSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LayerSweep(benchmark::State& state) {
  const ProjectConfig cfg;
  std::vector<SystemConfig> points;
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    for (auto s : pow2_sizes(32, 1024)) points.push_back(cfg.system(t, s));
  }
  Network net{"tinyml", {}};
  for (const Layer& l : fixtures::all()) net.layers.push_back({l, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_layers(points, {net}, Objective::Energy, exec_of(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
  state.counters["threads"] = max_threads();
}
BENCHMARK(BM_LayerSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PeakSweep(benchmark::State& state) {
  const ProjectConfig cfg;
  std::vector<SystemConfig> points;
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    for (auto s : pow2_sizes(8, 4096)) points.push_back(cfg.system(t, s));
  }
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_peak(points, exec_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_PeakSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
