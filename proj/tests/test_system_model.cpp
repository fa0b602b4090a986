#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"
#include "imcsim/errors.hpp"
#include "imcsim/sweep.hpp"
#include "imcsim/system_model.hpp"

using namespace imcsim;

namespace {

SystemConfig system(ImcType t, std::uint64_t size) {
  SystemConfig s;
  s.macro = default_macro(t, size);
  return s;
}

double sum(const std::map<std::string, double>& m) {
  double s = 0;
  for (const auto& [_, v] : m) s += v;
  return s;
}

}  // namespace

TEST(Peak, CacheGapAtSmallArrays) {
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    const SystemConfig sys = system(t, 32);
    const MacroMetrics macro = macro_metrics(sys.params, sys.macro);
    const SystemMetrics m = peak_system_metrics(sys);
    EXPECT_LE(m.tops_per_w, 0.5 * macro.tops_per_w) << to_string(t);
  }
}

TEST(Peak, FreeCacheEqualsMacro) {
  SystemConfig sys = system(ImcType::Aimc, 128);
  sys.cache.read_energy = 0;
  sys.cache.write_energy = 0;
  const SystemMetrics m = peak_system_metrics(sys);
  const MacroMetrics macro = macro_metrics(sys.params, sys.macro);
  EXPECT_DOUBLE_EQ(m.energy, macro.energy_per_mvm);
  EXPECT_DOUBLE_EQ(m.tops_per_w, macro.tops_per_w);
}

TEST(Peak, AreaAndBreakdownAdditive) {
  gen::Rng r(41);
  for (int i = 0; i < 50; ++i) {
    SystemConfig sys;
    sys.macro = gen::macro(r, r.coin() ? ImcType::Aimc : ImcType::Dimc);
    const SystemMetrics m = peak_system_metrics(sys);
    const MacroMetrics macro = macro_metrics(sys.params, sys.macro);
    EXPECT_NEAR(m.area, macro.area + sys.cache.area, 1e-9 * m.area);
    EXPECT_NEAR(sum(m.energy_breakdown), m.energy, 1e-9 * m.energy);
    EXPECT_EQ(m.energy_breakdown.at(kDram), 0.0);
    EXPECT_EQ(m.energy_breakdown.at(kWeightLoad), 0.0);
    for (const auto& [k, e] : m.energy_breakdown) EXPECT_GE(e, 0.0) << k;
  }
}

TEST(SystemConfig, BandwidthFitting) {
  SystemConfig sys = system(ImcType::Aimc, 64);
  EXPECT_DOUBLE_EQ(required_cache_bandwidth(sys.macro), 64.0 * 2 + 64.0 * 8);
  EXPECT_DOUBLE_EQ(effective_cache_bandwidth(sys), 640.0);
  sys.cache.bandwidth = 639;
  EXPECT_THROW(peak_system_metrics(sys), ConfigError);
  sys.cache.bandwidth = 1280;
  EXPECT_DOUBLE_EQ(effective_cache_bandwidth(sys), 1280.0);
  sys.dram_energy = 0;
  EXPECT_THROW(validate(sys), ConfigError);
}

TEST(LayerCost, HandAccountingForOneMapping) {
  const SystemConfig sys = system(ImcType::Aimc, 64);
  const Layer l = fixtures::pw_mobilenet();
  const MappingResult mr = evaluate_mapping(l, sys.macro, {64, 1, 32, 1, 1}, sys.cache.capacity);
  const SystemMetrics m = layer_cost(sys, l, mr);
  const auto per_mvm = mvm_energy_breakdown(sys.params, sys.macro, 32, 64);
  const double macro_e = sum(per_mvm) * double(mr.mvm_invocations);
  const Traffic& t = mr.traffic;
  const double want = macro_e + t.i_cache_reads * sys.cache.read_energy +
                      t.o_cache_writes * sys.cache.write_energy +
                      t.i_dram_reads * sys.dram_energy + t.w_dram_reads * sys.dram_energy +
                      t.w_macro_writes * sys.params.sram_cell_write_energy;
  EXPECT_NEAR(m.energy, want, 1e-12 * want);

  const MacroMetrics macro = macro_metrics(sys.params, sys.macro);
  const double stall = std::ceil(t.w_macro_writes / effective_cache_bandwidth(sys));
  const double latency = (double(mr.total_cycles) + stall) * macro.clock_period;
  EXPECT_NEAR(m.latency, latency, 1e-12 * latency);
  EXPECT_DOUBLE_EQ(m.tops, 2.0 * double(total_macs(l)) / m.latency);
  EXPECT_NEAR(m.delay_breakdown.at(kWeightLoadStall), stall * macro.clock_period, 1e-20);
}

TEST(LayerCost, ActivationOverflowStreamsInputsFromDram) {
  SystemConfig sys = system(ImcType::Dimc, 32);
  const Layer l = fixtures::conv_resnet8();
  sys.cache.capacity = 1000;
  const auto ev = layer_system_metrics(sys, l, Objective::Energy);
  EXPECT_EQ(ev.metrics.warnings.size(), 1u);
  EXPECT_GT(ev.mapping.traffic.o_dram_writes, 0.0);
  EXPECT_EQ(ev.metrics.energy_breakdown.at(kCache),
            ev.mapping.traffic.o_cache_writes * sys.cache.write_energy);
}

TEST(LayerCost, PeakBoundsWorkload) {
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    for (std::uint64_t s = 32; s <= 1024; s *= 2) {
      const SystemConfig sys = system(t, s);
      const SystemMetrics peak = peak_system_metrics(sys);
      for (const Layer& l : fixtures::all()) {
        const SystemMetrics m = layer_system_metrics(sys, l, Objective::Energy).metrics;
        EXPECT_LE(m.tops_per_w, peak.tops_per_w) << l.name << " @" << s;
        EXPECT_LE(m.tops, peak.tops) << l.name << " @" << s;
        EXPECT_NEAR(sum(m.energy_breakdown), m.energy, 1e-9 * m.energy);
        for (const auto& [k, e] : m.energy_breakdown) EXPECT_GE(e, 0.0) << k;
      }
    }
  }
}

TEST(LayerCost, FullUtilizationPerCycleEnergyEqualsPeak) {
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    const SystemConfig sys = system(t, 32);
    const auto gated = mvm_energy_breakdown(sys.params, sys.macro, 32, 32);
    EXPECT_DOUBLE_EQ(sum(gated), macro_metrics(sys.params, sys.macro).energy_per_mvm);
  }
}

TEST(LayerCost, FcDominatedByWeightLoad) {
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    const auto ev = layer_system_metrics(system(t, 1024), fixtures::fc_autoencoder(),
                                         Objective::Energy);
    const auto& br = ev.metrics.energy_breakdown;
    const double wl = br.at(kWeightLoad);
    for (const auto& [k, e] : br) {
      if (k != kWeightLoad) EXPECT_GT(wl, e) << k;
    }
    EXPECT_EQ(ev.mapping.mvm_invocations, ev.mapping.weight_tile_loads);
  }
}

TEST(LayerCost, ConvBeatsDwOnLargeArray) {
  const SystemConfig sys = system(ImcType::Aimc, 1024);
  const double conv =
      layer_system_metrics(sys, fixtures::conv_resnet8(), Objective::Energy).metrics.tops_per_w;
  const double dw =
      layer_system_metrics(sys, fixtures::dw_dscnn(), Objective::Energy).metrics.tops_per_w;
  EXPECT_GT(conv, dw);
}

// A layer that exactly fills the array and reuses each weight tile across a
// long OY loop approaches the peak figures. OY stays small enough for the
// activations to fit the cache.
TEST(LayerCost, LongReuseApproachesPeak) {
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    const SystemConfig sys = system(t, 32);
    Layer l;
    l.name = "fill";
    l.k = 32;
    l.fy = 32;
    l.oy = 6000;
    const auto ev = layer_system_metrics(sys, l, Objective::Energy);
    ASSERT_DOUBLE_EQ(ev.mapping.spatial_utilization, 1.0);
    ASSERT_TRUE(ev.metrics.warnings.empty());
    const SystemMetrics peak = peak_system_metrics(sys);
    EXPECT_NEAR(ev.metrics.tops_per_w / peak.tops_per_w, 1.0, 0.05) << to_string(t);
    EXPECT_NEAR(ev.metrics.tops / peak.tops, 1.0, 0.05) << to_string(t);
  }
}

TEST(Network, HomogeneousRepetitionKeepsEfficiency) {
  const SystemConfig sys = system(ImcType::Aimc, 256);
  const Layer conv = fixtures::conv_resnet8();
  const double single = layer_system_metrics(sys, conv, Objective::Energy).metrics.tops_per_w;
  Network n{"convs", {{conv, 5}}};
  EXPECT_NEAR(network_system_metrics(sys, n, Objective::Energy).total.tops_per_w, single,
              1e-12 * single);
  Network n2{"convs2", {{conv, 1}, {conv, 1}, {conv, 1}}};
  EXPECT_NEAR(network_system_metrics(sys, n2, Objective::Energy).total.tops_per_w, single,
              1e-12 * single);
}

TEST(Network, MixedNetworkBetweenItsLayers) {
  const SystemConfig sys = system(ImcType::Dimc, 128);
  const double conv =
      layer_system_metrics(sys, fixtures::conv_resnet8(), Objective::Energy).metrics.tops_per_w;
  const double dw =
      layer_system_metrics(sys, fixtures::dw_dscnn(), Objective::Energy).metrics.tops_per_w;
  Network n{"mix", {{fixtures::conv_resnet8(), 1}, {fixtures::dw_dscnn(), 1}}};
  const double mix = network_system_metrics(sys, n, Objective::Energy).total.tops_per_w;
  EXPECT_GT(mix, std::min(conv, dw));
  EXPECT_LT(mix, std::max(conv, dw));
}

TEST(Network, GeomeanOfIdenticalNetworks) {
  const SystemConfig sys = system(ImcType::Aimc, 64);
  Network n{"n", {{fixtures::pw_mobilenet(), 2}}};
  const NetworkEvaluation e = network_system_metrics(sys, n, Objective::Energy);
  const GeomeanMetrics g = geomean({e, e, e});
  EXPECT_NEAR(g.tops_per_w, e.total.tops_per_w, 1e-12 * g.tops_per_w);
  EXPECT_NEAR(g.tops_per_mm2, e.total.tops_per_mm2, 1e-12 * g.tops_per_mm2);
  EXPECT_THROW(geomean({}), EvaluationError);
  EXPECT_THROW(network_system_metrics(sys, Network{}, Objective::Energy), EvaluationError);
}

TEST(Sweep, SerialAndParallelBitIdentical) {
  std::vector<SystemConfig> points;
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    for (std::uint64_t s : pow2_sizes(32, 512)) points.push_back(system(t, s));
  }
  const auto ps = evaluate_peak(points, Exec::Serial);
  const auto pp = evaluate_peak(points, Exec::Parallel);
  ASSERT_EQ(ps.size(), pp.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_EQ(ps[i].system.energy, pp[i].system.energy);
    EXPECT_EQ(ps[i].system.tops, pp[i].system.tops);
  }
  const std::vector<Network> nets = {Network{"all", {{fixtures::conv_resnet8(), 1},
                                                     {fixtures::fc_autoencoder(), 1},
                                                     {fixtures::dw_dscnn(), 1}}}};
  const auto ls = evaluate_layers(points, nets, Objective::Edp, Exec::Serial);
  const auto lp = evaluate_layers(points, nets, Objective::Edp, Exec::Parallel);
  ASSERT_EQ(ls.size(), points.size() * 3);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    EXPECT_EQ(ls[i].eval.mapping.mapping, lp[i].eval.mapping.mapping);
    EXPECT_EQ(ls[i].eval.metrics.energy, lp[i].eval.metrics.energy);
    EXPECT_EQ(ls[i].eval.metrics.latency, lp[i].eval.metrics.latency);
  }
}

TEST(Sweep, Pow2Sizes) {
  EXPECT_EQ(pow2_sizes(32, 1024), (std::vector<std::uint64_t>{32, 64, 128, 256, 512, 1024}));
  EXPECT_EQ(pow2_sizes(8, 8), (std::vector<std::uint64_t>{8}));
}
