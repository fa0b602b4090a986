#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string_view>
#include <tuple>
#include <vector>

#include "imcsim/macro_model.hpp"
#include "imcsim/parallel.hpp"
#include "imcsim/workload.hpp"

namespace imcsim {

// Spatial unrolling onto one macro: K and OX across columns (D_o), C, FX and
// FY across rows (D_i). G is never unrolled spatially.
struct SpatialMapping {
  std::uint64_t k_u = 1;
  std::uint64_t ox_u = 1;
  std::uint64_t c_u = 1;
  std::uint64_t fx_u = 1;
  std::uint64_t fy_u = 1;

  [[nodiscard]] std::uint64_t rows() const { return c_u * fx_u * fy_u; }
  [[nodiscard]] std::uint64_t cols() const { return k_u * ox_u; }
  [[nodiscard]] auto tie() const { return std::tie(k_u, ox_u, c_u, fx_u, fy_u); }
  friend bool operator==(const SpatialMapping&, const SpatialMapping&) = default;
  friend auto operator<=>(const SpatialMapping& a, const SpatialMapping& b) {
    return a.tie() <=> b.tie();
  }
};

enum class Operand { W, I, O };
enum class MemLevel { Dram, Cache, Macro };

// Bits moved per operand and level for one layer under the fixed
// weight-stationary schedule.
struct Traffic {
  double w_dram_reads = 0;
  double w_macro_writes = 0;
  double i_dram_reads = 0;
  double i_cache_reads = 0;
  double o_cache_writes = 0;
  double o_dram_writes = 0;

  // Zero for (operand, level) pairs the schedule never touches.
  [[nodiscard]] double bits(Operand op, MemLevel level) const;
  friend bool operator==(const Traffic&, const Traffic&) = default;
};

struct MappingResult {
  SpatialMapping mapping;
  double spatial_utilization = 0.0;
  std::uint64_t mvm_invocations = 0;
  std::uint64_t total_cycles = 0;
  std::uint64_t weight_tile_loads = 0;
  Traffic traffic;
  double in_unroll_ratio = 0.0;
  double out_unroll_ratio = 0.0;
};

// Effective operand precisions of a layer on a macro. Layer overrides win;
// a weight precision different from the array's is rejected.
struct LayerPrecision {
  int b_i;
  int b_w;
  int b_o;
};
LayerPrecision resolve_precision(const Layer& layer, const ImcMacroConfig& cfg);

// Ascending divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_feasible(const Layer& layer, const ImcMacroConfig& cfg, const SpatialMapping& m);

// All divisor-factor mappings that fit the array, in lexicographic order.
std::vector<SpatialMapping> enumerate_mappings(const Layer& layer, const ImcMacroConfig& cfg);

// `cache_capacity_bits` decides whether outputs spill to DRAM.
MappingResult evaluate_mapping(const Layer& layer, const ImcMacroConfig& cfg,
                               const SpatialMapping& mapping, double cache_capacity_bits);

enum class Objective { Energy, Latency, Edp };
std::string_view to_string(Objective o);
Objective parse_objective(std::string_view s);

// One scored candidate. Lower score wins; ties go to higher utilization,
// then to the lexicographically smallest mapping.
struct ScoredMapping {
  MappingResult result;
  double score = 0.0;
};
bool better_candidate(const ScoredMapping& a, const ScoredMapping& b);

using MappingScore = std::function<double(const MappingResult&)>;

// Exhaustive search over enumerate_mappings. The parallel path scores
// candidates concurrently and reduces them in enumeration order.
ScoredMapping search_best_mapping(const Layer& layer, const ImcMacroConfig& cfg,
                                  double cache_capacity_bits, const MappingScore& score,
                                  Exec exec = Exec::Parallel);

}  // namespace imcsim
