#pragma once

#include <map>
#include <string>
#include <vector>

#include "imcsim/macro_model.hpp"
#include "imcsim/mapper.hpp"
#include "imcsim/technology.hpp"
#include "imcsim/workload.hpp"

namespace imcsim {

struct MemoryLevel {
  std::string name = "cache";
  double capacity = 256.0 * 1024 * 8;  // bits
  double read_energy = 1.0e-12;        // J/bit
  double write_energy = 1.0e-12;       // J/bit
  double area = 0.5e6;                 // um^2
  double bandwidth = 0.0;              // bits/cycle; 0 sizes it to the macro
};

struct SystemConfig {
  ImcMacroConfig macro;
  TechnologyParams params;
  MemoryLevel cache;
  double dram_energy = 3.7e-12;  // J/bit
};

// Minimum cache bandwidth that feeds one macro cycle: inputs in, outputs out.
double required_cache_bandwidth(const ImcMacroConfig& macro);
double effective_cache_bandwidth(const SystemConfig& sys);

// Throws ConfigError on invalid fields or a cache narrower than the macro.
void validate(const SystemConfig& sys);

// Keys beyond the macro components.
inline constexpr const char* kCache = "cache";
inline constexpr const char* kDram = "dram";
inline constexpr const char* kWeightLoad = "weight_load";
inline constexpr const char* kWeightLoadStall = "weight_load_stall";

struct SystemMetrics {
  double tops = 0.0;
  double tops_per_w = 0.0;
  double tops_per_mm2 = 0.0;
  double energy = 0.0;   // J
  double latency = 0.0;  // s
  double area = 0.0;     // um^2
  double macs = 0.0;
  std::map<std::string, double> energy_breakdown;
  std::map<std::string, double> delay_breakdown;
  std::map<std::string, double> area_breakdown;
  std::vector<std::string> warnings;
};

// Dense GeMM filling every macro, weights stationary forever. Figures are
// for one MVM on each macro.
SystemMetrics peak_system_metrics(const SystemConfig& sys);

// System cost of running `layer` with a given mapping.
SystemMetrics layer_cost(const SystemConfig& sys, const Layer& layer, const MappingResult& mr);

double objective_score(const SystemMetrics& m, Objective objective);

struct LayerEvaluation {
  MappingResult mapping;
  SystemMetrics metrics;
};

LayerEvaluation best_mapping(const SystemConfig& sys, const Layer& layer, Objective objective,
                             Exec exec = Exec::Parallel);

LayerEvaluation layer_system_metrics(const SystemConfig& sys, const Layer& layer,
                                     Objective objective, Exec exec = Exec::Parallel);

struct NetworkLayerRow {
  Layer layer;
  std::uint64_t repeat = 1;
  LayerEvaluation eval;
};

struct NetworkEvaluation {
  std::string name;
  SystemMetrics total;
  std::vector<NetworkLayerRow> layers;
};

NetworkEvaluation network_system_metrics(const SystemConfig& sys, const Network& net,
                                         Objective objective, Exec exec = Exec::Parallel);

struct GeomeanMetrics {
  double tops = 0.0;
  double tops_per_w = 0.0;
  double tops_per_mm2 = 0.0;
};

GeomeanMetrics geomean(const std::vector<NetworkEvaluation>& nets);

}  // namespace imcsim
