#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "imcsim/component_models.hpp"
#include "imcsim/technology.hpp"

namespace imcsim {

enum class ImcType { Aimc, Dimc };

// Which input precision drives the ADC resolution: the bits applied per
// cycle (bit-serial slice) or the full activation precision.
enum class AdcInputBits { PerCycle, FullInput };

std::string_view to_string(ImcType t);
ImcType parse_imc_type(std::string_view s);

struct ImcMacroConfig {
  ImcType imc_type = ImcType::Aimc;
  int b_i = 8;
  int b_w = 8;
  int b_cycle = 2;
  std::uint64_t d_i = 32;
  std::uint64_t d_o = 32;
  std::uint64_t m = 1;
  std::uint64_t n_macros = 1;
  double input_toggle_rate = 0.5;
  double weight_sparsity = 0.0;
  bool pipelined = false;
  int b_o = 8;
  AdcInputBits adc_input_bits = AdcInputBits::PerCycle;

  // Switching activity applied to data-dependent energies.
  [[nodiscard]] double activity() const {
    return input_toggle_rate * (1.0 - weight_sparsity);
  }
  [[nodiscard]] int cycles_per_mvm() const { return (b_i + b_cycle - 1) / b_cycle; }
  [[nodiscard]] double macs_per_mvm() const {
    return static_cast<double>(d_i) * static_cast<double>(d_o);
  }

  // Throws ConfigError on out-of-range fields.
  void validate() const;
};

// Benchmarking defaults: INT8, bit-serial 2b/cycle for AIMC, 1b/cycle for DIMC.
ImcMacroConfig default_macro(ImcType type, std::uint64_t size);

// Component keys shared by both macro types; absent components are zero.
inline constexpr std::array<std::string_view, 8> kMacroComponents = {
    "cell_array", "dac", "adc", "multiplier", "adder_tree", "accumulator",
    "input_register", "pipeline_register"};

using CostBreakdown = std::map<std::string, ComponentCost>;

struct MacroMetrics {
  double energy_per_mvm = 0.0;  // J, one macro
  double clock_period = 0.0;    // s
  int cycles_per_mvm = 0;
  double area = 0.0;  // um^2, all macros
  double tops = 0.0;  // ops/s, 2 ops per MAC
  double tops_per_w = 0.0;
  double tops_per_mm2 = 0.0;
  int adc_resolution = 0;  // 0 for DIMC
  // energy: per MVM of one macro; delay: share of the clock period; area:
  // all macros.
  CostBreakdown breakdown;
  std::vector<std::string> warnings;
};

// Per-MVM energy of one macro by component, with `used_rows` of d_i and
// `used_cols` of d_o active; idle columns and rows are gated.
std::map<std::string, double> mvm_energy_breakdown(const TechnologyParams& p,
                                                   const ImcMacroConfig& cfg,
                                                   std::uint64_t used_rows,
                                                   std::uint64_t used_cols);

MacroMetrics aimc_macro_metrics(const TechnologyParams& p, const ImcMacroConfig& cfg);
MacroMetrics dimc_macro_metrics(const TechnologyParams& p, const ImcMacroConfig& cfg);
MacroMetrics macro_metrics(const TechnologyParams& p, const ImcMacroConfig& cfg);

}  // namespace imcsim
