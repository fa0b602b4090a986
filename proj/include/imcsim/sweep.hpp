#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imcsim/macro_model.hpp"
#include "imcsim/parallel.hpp"
#include "imcsim/system_model.hpp"
#include "imcsim/workload.hpp"

namespace imcsim {

struct PeakRow {
  SystemConfig sys;
  MacroMetrics macro;
  SystemMetrics system;
};

// One row per design point, in input order.
std::vector<PeakRow> evaluate_peak(const std::vector<SystemConfig>& points,
                                   Exec exec = Exec::Parallel);

struct LayerRow {
  SystemConfig sys;
  std::string network;
  Layer layer;
  std::uint64_t repeat = 1;
  LayerEvaluation eval;
};

// Cross product points x layers, point-major order.
std::vector<LayerRow> evaluate_layers(const std::vector<SystemConfig>& points,
                                      const std::vector<Network>& networks, Objective objective,
                                      Exec exec = Exec::Parallel);

// Powers of two from `lo` to `hi` inclusive.
std::vector<std::uint64_t> pow2_sizes(std::uint64_t lo, std::uint64_t hi);

}  // namespace imcsim
