#include "imcsim/macro_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "imcsim/errors.hpp"

namespace imcsim {
namespace {

struct Composition {
  std::map<std::string, double> per_cycle;  // J per cycle
  std::map<std::string, double> per_mvm;    // J once per MVM
  std::map<std::string, double> delay;      // critical-path share, s
  std::map<std::string, double> area;       // one macro, um^2
  double clock_period = 0.0;
  int adc_res = 0;
};

Composition empty_composition() {
  Composition c;
  for (auto key : kMacroComponents) {
    const std::string k(key);
    c.per_cycle[k] = 0.0;
    c.per_mvm[k] = 0.0;
    c.delay[k] = 0.0;
    c.area[k] = 0.0;
  }
  return c;
}

void check_usage(const ImcMacroConfig& cfg, std::uint64_t rows, std::uint64_t cols) {
  if (rows < 1 || rows > cfg.d_i || cols < 1 || cols > cfg.d_o) {
    throw EvaluationError("used rows/columns exceed the macro dimensions");
  }
}

Composition compose_aimc(const TechnologyParams& p, const ImcMacroConfig& cfg,
                         std::uint64_t rows, std::uint64_t cols) {
  check_usage(cfg, rows, cols);
  Composition c = empty_composition();
  const double alpha = cfg.activity();
  const auto q = static_cast<double>(cols);
  const auto d_o = static_cast<double>(cfg.d_o);
  const auto d_i = static_cast<double>(cfg.d_i);
  const double b_w = cfg.b_w;

  const int adc_bits = cfg.adc_input_bits == AdcInputBits::PerCycle ? cfg.b_cycle : cfg.b_i;
  const int res = adc_resolution(p, adc_bits, cfg.d_i);
  c.adc_res = res;

  // Per-output shift-add tree merges the b_w bit-column conversions.
  const auto fan_in = static_cast<std::uint64_t>(cfg.b_w);
  const ComponentCost tree = padded_adder_tree_cost(p, fan_in, res, alpha);
  const int b_adds_out = res + ceil_log2(fan_in);
  const int b_acc = b_adds_out + (cfg.b_i - cfg.b_cycle);
  const ComponentCost acc = accumulator_cost(p, b_acc, b_adds_out);
  const ComponentCost dff = register_cost(p, 1);
  const auto pipe_bits = static_cast<double>(res) * b_w;

  c.per_cycle["cell_array"] = cell_array_energy(p, cfg.b_w, rows, cols, alpha);
  c.per_cycle["dac"] = static_cast<double>(rows) * dac_energy(p, cfg.b_cycle);
  c.per_cycle["adc"] = q * b_w * adc_energy(p, res);
  c.per_cycle["adder_tree"] = q * tree.energy;
  c.per_cycle["accumulator"] = q * acc.energy;
  if (cfg.pipelined) c.per_cycle["pipeline_register"] = q * pipe_bits * dff.energy;
  c.per_mvm["input_register"] = d_i * cfg.b_i * dff.energy;

  const double t_adc = adc_delay(p, res, cfg.d_i);
  const double t_digital = tree.delay + acc.delay;
  if (!cfg.pipelined) {
    c.delay["adc"] = t_adc;
    c.delay["adder_tree"] = tree.delay;
    c.delay["accumulator"] = acc.delay;
  } else if (t_adc >= t_digital) {
    c.delay["adc"] = t_adc;
  } else {
    c.delay["adder_tree"] = tree.delay;
    c.delay["accumulator"] = acc.delay;
  }
  c.clock_period = cfg.pipelined ? std::max(t_adc, t_digital) : t_adc + t_digital;

  c.area["cell_array"] = sram_array_area(p, cfg.d_i * cfg.d_o * cfg.m *
                                                static_cast<std::uint64_t>(cfg.b_w));
  c.area["adc"] = d_o * b_w * adc_area(p, res);
  c.area["adder_tree"] = d_o * tree.area;
  c.area["accumulator"] = d_o * acc.area;
  c.area["input_register"] = d_i * cfg.b_i * dff.area;
  if (cfg.pipelined) c.area["pipeline_register"] = d_o * pipe_bits * dff.area;
  return c;
}

Composition compose_dimc(const TechnologyParams& p, const ImcMacroConfig& cfg,
                         std::uint64_t rows, std::uint64_t cols) {
  check_usage(cfg, rows, cols);
  Composition c = empty_composition();
  const double alpha = cfg.activity();
  const auto q = static_cast<double>(cols);
  const auto d_o = static_cast<double>(cfg.d_o);
  const auto d_i = static_cast<double>(cfg.d_i);
  const double b_w = cfg.b_w;
  const double b_cycle = cfg.b_cycle;

  // One tree per input bit slice, then a combine tree over the slices.
  const ComponentCost tree = padded_adder_tree_cost(p, cfg.d_i, cfg.b_w, alpha);
  int b_adds_out = cfg.b_w + ceil_log2(cfg.d_i);
  ComponentCost combine{};
  if (cfg.b_cycle > 1) {
    combine = padded_adder_tree_cost(p, static_cast<std::uint64_t>(cfg.b_cycle),
                                     b_adds_out, alpha);
    b_adds_out += ceil_log2(static_cast<std::uint64_t>(cfg.b_cycle));
  }
  const int b_acc = b_adds_out + (cfg.b_i - cfg.b_cycle);
  const ComponentCost acc = accumulator_cost(p, b_acc, b_adds_out);
  const ComponentCost mult = multiplier_cost(p);
  const ComponentCost dff = register_cost(p, 1);
  const double pipe_bits = b_cycle * d_i * b_w;

  c.per_cycle["multiplier"] = static_cast<double>(rows) * q * b_w * b_cycle * mult.energy * alpha;
  c.per_cycle["adder_tree"] = q * (b_cycle * tree.energy + combine.energy);
  c.per_cycle["accumulator"] = q * acc.energy;
  if (cfg.pipelined) c.per_cycle["pipeline_register"] = q * pipe_bits * dff.energy;
  c.per_mvm["input_register"] = d_i * cfg.b_i * dff.energy;

  const double t_mult = mult.delay;
  const double t_tree = tree.delay + combine.delay;
  const double t_rest = t_tree + acc.delay;
  if (!cfg.pipelined) {
    c.delay["multiplier"] = t_mult;
    c.delay["adder_tree"] = t_tree;
    c.delay["accumulator"] = acc.delay;
  } else if (t_mult >= t_rest) {
    c.delay["multiplier"] = t_mult;
  } else {
    c.delay["adder_tree"] = t_tree;
    c.delay["accumulator"] = acc.delay;
  }
  c.clock_period = cfg.pipelined ? std::max(t_mult, t_rest) : t_mult + t_rest;

  c.area["cell_array"] = sram_array_area(p, cfg.d_i * cfg.d_o * cfg.m *
                                                static_cast<std::uint64_t>(cfg.b_w));
  c.area["multiplier"] = d_i * d_o * b_w * b_cycle * mult.area;
  c.area["adder_tree"] = d_o * (b_cycle * tree.area + combine.area);
  c.area["accumulator"] = d_o * acc.area;
  c.area["input_register"] = d_i * cfg.b_i * dff.area;
  if (cfg.pipelined) c.area["pipeline_register"] = d_o * pipe_bits * dff.area;
  return c;
}

Composition compose(const TechnologyParams& p, const ImcMacroConfig& cfg,
                    std::uint64_t rows, std::uint64_t cols) {
  cfg.validate();
  switch (cfg.imc_type) {
    case ImcType::Aimc:
      return compose_aimc(p, cfg, rows, cols);
    case ImcType::Dimc:
      return compose_dimc(p, cfg, rows, cols);
  }
  throw EvaluationError("unknown IMC type");
}

MacroMetrics assemble(const ImcMacroConfig& cfg, const Composition& c) {
  MacroMetrics m;
  m.cycles_per_mvm = cfg.cycles_per_mvm();
  m.clock_period = c.clock_period;
  m.adc_resolution = c.adc_res;
  const auto n = static_cast<double>(cfg.n_macros);
  const double cycles = m.cycles_per_mvm;
  // Fixed key order keeps floating-point sums reproducible.
  for (auto key : kMacroComponents) {
    const std::string k(key);
    ComponentCost cc;
    cc.energy = cycles * c.per_cycle.at(k) + c.per_mvm.at(k);
    cc.delay = c.delay.at(k);
    cc.area = n * c.area.at(k);
    m.energy_per_mvm += cc.energy;
    m.area += cc.area;
    m.breakdown[k] = cc;
  }
  const double ops = 2.0 * cfg.macs_per_mvm();
  m.tops = ops * n / (m.clock_period * cycles);
  m.tops_per_w = ops / m.energy_per_mvm;
  m.tops_per_mm2 = m.tops / (m.area * 1e-6);
  if (cfg.b_i % cfg.b_cycle != 0) {
    m.warnings.push_back("b_cycle does not divide b_i; cycles_per_mvm rounded up");
  }
  return m;
}

}  // namespace

std::string_view to_string(ImcType t) {
  return t == ImcType::Aimc ? "aimc" : "dimc";
}

ImcType parse_imc_type(std::string_view s) {
  if (s == "aimc" || s == "AIMC") return ImcType::Aimc;
  if (s == "dimc" || s == "DIMC") return ImcType::Dimc;
  throw ConfigError("unknown IMC type '" + std::string(s) + "' (expected aimc or dimc)");
}

void ImcMacroConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("macro." + what); };
  if (imc_type != ImcType::Aimc && imc_type != ImcType::Dimc) fail("type is unknown");
  if (b_i < 1) fail("b_i must be >= 1");
  if (b_w < 1) fail("b_w must be >= 1");
  if (b_o < 1) fail("b_o must be >= 1");
  if (b_cycle < 1 || b_cycle > b_i) fail("b_cycle must be in [1, b_i]");
  if (d_i < 1) fail("d_i must be >= 1");
  if (d_o < 1) fail("d_o must be >= 1");
  if (m < 1) fail("m must be >= 1");
  if (n_macros < 1) fail("n_macros must be >= 1");
  if (!(input_toggle_rate >= 0.0 && input_toggle_rate <= 1.0)) {
    fail("input_toggle_rate must be in [0, 1]");
  }
  if (!(weight_sparsity >= 0.0 && weight_sparsity <= 1.0)) {
    fail("weight_sparsity must be in [0, 1]");
  }
}

ImcMacroConfig default_macro(ImcType type, std::uint64_t size) {
  ImcMacroConfig cfg;
  cfg.imc_type = type;
  cfg.b_cycle = type == ImcType::Aimc ? 2 : 1;
  cfg.d_i = size;
  cfg.d_o = size;
  return cfg;
}

std::map<std::string, double> mvm_energy_breakdown(const TechnologyParams& p,
                                                   const ImcMacroConfig& cfg,
                                                   std::uint64_t used_rows,
                                                   std::uint64_t used_cols) {
  const Composition c = compose(p, cfg, used_rows, used_cols);
  const double cycles = cfg.cycles_per_mvm();
  std::map<std::string, double> out;
  for (auto key : kMacroComponents) {
    const std::string k(key);
    out[k] = cycles * c.per_cycle.at(k) + c.per_mvm.at(k);
  }
  return out;
}

MacroMetrics aimc_macro_metrics(const TechnologyParams& p, const ImcMacroConfig& cfg) {
  if (cfg.imc_type != ImcType::Aimc) {
    throw EvaluationError("aimc_macro_metrics called with a DIMC config");
  }
  cfg.validate();
  return assemble(cfg, compose_aimc(p, cfg, cfg.d_i, cfg.d_o));
}

MacroMetrics dimc_macro_metrics(const TechnologyParams& p, const ImcMacroConfig& cfg) {
  if (cfg.imc_type != ImcType::Dimc) {
    throw EvaluationError("dimc_macro_metrics called with an AIMC config");
  }
  cfg.validate();
  return assemble(cfg, compose_dimc(p, cfg, cfg.d_i, cfg.d_o));
}

MacroMetrics macro_metrics(const TechnologyParams& p, const ImcMacroConfig& cfg) {
  switch (cfg.imc_type) {
    case ImcType::Aimc:
      return aimc_macro_metrics(p, cfg);
    case ImcType::Dimc:
      return dimc_macro_metrics(p, cfg);
  }
  throw EvaluationError("unknown IMC type");
}

}  // namespace imcsim
