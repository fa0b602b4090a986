#include "imcsim/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "imcsim/errors.hpp"

namespace imcsim {
namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

void finish_rates(SystemMetrics& m) {
  const double ops = 2.0 * m.macs;
  m.tops = ops / m.latency;
  m.tops_per_w = ops / m.energy;
  m.tops_per_mm2 = m.tops / (m.area * 1e-6);
}

// Macro configuration actually exercised by a layer (bit-serial inputs adapt
// to the layer's activation precision).
ImcMacroConfig layer_macro(const ImcMacroConfig& macro, const LayerPrecision& prec) {
  ImcMacroConfig cfg = macro;
  cfg.b_i = prec.b_i;
  cfg.b_cycle = std::min(macro.b_cycle, prec.b_i);
  cfg.b_o = prec.b_o;
  return cfg;
}

}  // namespace

double required_cache_bandwidth(const ImcMacroConfig& macro) {
  return static_cast<double>(macro.d_i) * macro.b_cycle +
         static_cast<double>(macro.d_o) * macro.b_o;
}

double effective_cache_bandwidth(const SystemConfig& sys) {
  return sys.cache.bandwidth > 0.0 ? sys.cache.bandwidth : required_cache_bandwidth(sys.macro);
}

void validate(const SystemConfig& sys) {
  sys.params.validate();
  sys.macro.validate();
  const MemoryLevel& c = sys.cache;
  if (!(c.capacity > 0.0)) throw ConfigError("cache.capacity must be > 0");
  // Zero access energies are allowed as a degenerate (free-memory) calibration.
  if (!(c.read_energy >= 0.0)) throw ConfigError("cache.read_energy must be >= 0");
  if (!(c.write_energy >= 0.0)) throw ConfigError("cache.write_energy must be >= 0");
  if (!(c.area >= 0.0)) throw ConfigError("cache.area must be >= 0");
  if (!(c.bandwidth >= 0.0)) throw ConfigError("cache.bandwidth must be >= 0");
  if (c.bandwidth > 0.0 && c.bandwidth < required_cache_bandwidth(sys.macro)) {
    throw ConfigError("cache.bandwidth " + std::to_string(c.bandwidth) +
                      " bits/cycle does not fit the macro (needs >= " +
                      std::to_string(required_cache_bandwidth(sys.macro)) + ")");
  }
  if (!(sys.dram_energy > 0.0)) throw ConfigError("dram_energy must be > 0");
}

SystemMetrics peak_system_metrics(const SystemConfig& sys) {
  validate(sys);
  const ImcMacroConfig& cfg = sys.macro;
  const MacroMetrics macro = macro_metrics(sys.params, cfg);
  const auto n = static_cast<double>(cfg.n_macros);

  SystemMetrics m;
  m.macs = cfg.macs_per_mvm() * n;
  for (const auto& [key, cost] : macro.breakdown) {
    m.energy_breakdown[key] = n * cost.energy;
    m.delay_breakdown[key] = cost.delay * macro.cycles_per_mvm;
    m.area_breakdown[key] = cost.area;
  }
  // Inputs multicast across columns, outputs written once per MVM.
  const double in_bits = static_cast<double>(cfg.d_i) * cfg.b_i;
  const double out_bits = static_cast<double>(cfg.d_o) * cfg.b_o;
  m.energy_breakdown[kCache] =
      n * (in_bits * sys.cache.read_energy + out_bits * sys.cache.write_energy);
  m.energy_breakdown[kDram] = 0.0;
  m.energy_breakdown[kWeightLoad] = 0.0;
  m.delay_breakdown[kWeightLoadStall] = 0.0;
  m.area_breakdown[kCache] = sys.cache.area;

  for (const auto& [_, e] : m.energy_breakdown) m.energy += e;
  for (const auto& [_, d] : m.delay_breakdown) m.latency += d;
  for (const auto& [_, a] : m.area_breakdown) m.area += a;
  finish_rates(m);
  m.warnings = macro.warnings;
  return m;
}

SystemMetrics layer_cost(const SystemConfig& sys, const Layer& layer, const MappingResult& mr) {
  const LayerPrecision prec = resolve_precision(layer, sys.macro);
  const ImcMacroConfig cfg = layer_macro(sys.macro, prec);
  const MacroMetrics macro = macro_metrics(sys.params, cfg);
  const auto mvms = static_cast<double>(mr.mvm_invocations);
  const Traffic& t = mr.traffic;

  SystemMetrics m;
  m.macs = static_cast<double>(total_macs(layer));

  const auto per_mvm = mvm_energy_breakdown(sys.params, cfg, mr.mapping.rows(), mr.mapping.cols());
  for (const auto& [key, e] : per_mvm) m.energy_breakdown[key] = mvms * e;

  const double activation_bits = static_cast<double>(layer.input_elements()) * prec.b_i +
                                 static_cast<double>(layer.output_elements()) * prec.b_o;
  double cache_e = t.o_cache_writes * sys.cache.write_energy;
  double dram_e = t.o_dram_writes * sys.dram_energy;
  if (activation_bits > sys.cache.capacity) {
    // Inputs no longer fit next to the outputs: every access goes to DRAM.
    dram_e += t.i_cache_reads * sys.dram_energy;
    m.warnings.push_back("layer '" + layer.name +
                         "' activations exceed the cache; inputs streamed from DRAM");
  } else {
    cache_e += t.i_cache_reads * sys.cache.read_energy;
    dram_e += t.i_dram_reads * sys.dram_energy;
  }
  m.energy_breakdown[kCache] = cache_e;
  m.energy_breakdown[kDram] = dram_e;
  m.energy_breakdown[kWeightLoad] =
      t.w_dram_reads * sys.dram_energy + t.w_macro_writes * sys.params.sram_cell_write_energy;

  const std::uint64_t compute_cycles =
      ceil_div(mr.mvm_invocations, sys.macro.n_macros) * static_cast<std::uint64_t>(macro.cycles_per_mvm);
  const double bw = effective_cache_bandwidth(sys);
  const double stall_cycles = std::ceil(t.w_macro_writes / bw);
  for (const auto& [key, cost] : macro.breakdown) {
    m.delay_breakdown[key] = cost.delay * static_cast<double>(compute_cycles);
    m.area_breakdown[key] = cost.area;
  }
  m.delay_breakdown[kWeightLoadStall] = stall_cycles * macro.clock_period;
  m.area_breakdown[kCache] = sys.cache.area;

  for (const auto& [_, e] : m.energy_breakdown) m.energy += e;
  for (const auto& [_, d] : m.delay_breakdown) m.latency += d;
  for (const auto& [_, a] : m.area_breakdown) m.area += a;
  finish_rates(m);
  return m;
}

double objective_score(const SystemMetrics& m, Objective objective) {
  switch (objective) {
    case Objective::Energy: return m.energy;
    case Objective::Latency: return m.latency;
    case Objective::Edp: return m.energy * m.latency;
  }
  return m.energy;
}

LayerEvaluation best_mapping(const SystemConfig& sys, const Layer& layer, Objective objective,
                             Exec exec) {
  validate(sys);
  const ScoredMapping best = search_best_mapping(
      layer, sys.macro, sys.cache.capacity,
      [&](const MappingResult& mr) { return objective_score(layer_cost(sys, layer, mr), objective); },
      exec);
  return {best.result, layer_cost(sys, layer, best.result)};
}

LayerEvaluation layer_system_metrics(const SystemConfig& sys, const Layer& layer,
                                     Objective objective, Exec exec) {
  return best_mapping(sys, layer, objective, exec);
}

NetworkEvaluation network_system_metrics(const SystemConfig& sys, const Network& net,
                                         Objective objective, Exec exec) {
  if (net.layers.empty()) throw EvaluationError("network must contain at least one layer");
  NetworkEvaluation out;
  out.name = net.name;
  SystemMetrics& tot = out.total;
  for (const NetworkEntry& entry : net.layers) {
    NetworkLayerRow row{entry.layer, entry.repeat,
                        layer_system_metrics(sys, entry.layer, objective, exec)};
    const auto rep = static_cast<double>(entry.repeat);
    const SystemMetrics& lm = row.eval.metrics;
    tot.macs += rep * lm.macs;
    for (const auto& [k, e] : lm.energy_breakdown) tot.energy_breakdown[k] += rep * e;
    for (const auto& [k, d] : lm.delay_breakdown) tot.delay_breakdown[k] += rep * d;
    tot.area_breakdown = lm.area_breakdown;
    tot.warnings.insert(tot.warnings.end(), lm.warnings.begin(), lm.warnings.end());
    out.layers.push_back(std::move(row));
  }
  for (const auto& [_, e] : tot.energy_breakdown) tot.energy += e;
  for (const auto& [_, d] : tot.delay_breakdown) tot.latency += d;
  for (const auto& [_, a] : tot.area_breakdown) tot.area += a;
  finish_rates(tot);
  return out;
}

GeomeanMetrics geomean(const std::vector<NetworkEvaluation>& nets) {
  if (nets.empty()) throw EvaluationError("geomean of an empty network list");
  double lt = 0.0, lw = 0.0, la = 0.0;
  for (const auto& n : nets) {
    lt += std::log(n.total.tops);
    lw += std::log(n.total.tops_per_w);
    la += std::log(n.total.tops_per_mm2);
  }
  const auto k = static_cast<double>(nets.size());
  return {std::exp(lt / k), std::exp(lw / k), std::exp(la / k)};
}

}  // namespace imcsim
