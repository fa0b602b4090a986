#include "imcsim/mapper.hpp"

#include <algorithm>
#include <string>

#include "imcsim/errors.hpp"

namespace imcsim {
namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

double Traffic::bits(Operand op, MemLevel level) const {
  switch (op) {
    case Operand::W:
      if (level == MemLevel::Dram) return w_dram_reads;
      if (level == MemLevel::Macro) return w_macro_writes;
      return 0.0;
    case Operand::I:
      if (level == MemLevel::Dram) return i_dram_reads;
      if (level == MemLevel::Cache) return i_cache_reads;
      return 0.0;
    case Operand::O:
      if (level == MemLevel::Cache) return o_cache_writes;
      if (level == MemLevel::Dram) return o_dram_writes;
      return 0.0;
  }
  return 0.0;
}

LayerPrecision resolve_precision(const Layer& layer, const ImcMacroConfig& cfg) {
  LayerPrecision p{layer.b_i.value_or(cfg.b_i), layer.b_w.value_or(cfg.b_w),
                   layer.b_o.value_or(cfg.b_o)};
  if (p.b_w != cfg.b_w) {
    throw EvaluationError("layer '" + layer.name + "' uses " + std::to_string(p.b_w) +
                          "b weights but the array stores " + std::to_string(cfg.b_w) + "b");
  }
  return p;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo;
  std::vector<std::uint64_t> hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool is_feasible(const Layer& l, const ImcMacroConfig& cfg, const SpatialMapping& m) {
  auto fits = [](std::uint64_t f, std::uint64_t bound) {
    return f >= 1 && f <= bound && bound % f == 0;
  };
  return fits(m.k_u, l.k) && fits(m.ox_u, l.ox) && fits(m.c_u, l.c) && fits(m.fx_u, l.fx) &&
         fits(m.fy_u, l.fy) && m.cols() <= cfg.d_o && m.rows() <= cfg.d_i;
}

std::vector<SpatialMapping> enumerate_mappings(const Layer& l, const ImcMacroConfig& cfg) {
  std::vector<SpatialMapping> out;
  const auto ks = divisors(l.k);
  const auto oxs = divisors(l.ox);
  const auto cs = divisors(l.c);
  const auto fxs = divisors(l.fx);
  const auto fys = divisors(l.fy);
  for (auto k_u : ks) {
    if (k_u > cfg.d_o) break;
    for (auto ox_u : oxs) {
      if (k_u * ox_u > cfg.d_o) break;
      for (auto c_u : cs) {
        if (c_u > cfg.d_i) break;
        for (auto fx_u : fxs) {
          if (c_u * fx_u > cfg.d_i) break;
          for (auto fy_u : fys) {
            if (c_u * fx_u * fy_u > cfg.d_i) break;
            out.push_back({k_u, ox_u, c_u, fx_u, fy_u});
          }
        }
      }
    }
  }
  return out;
}

MappingResult evaluate_mapping(const Layer& l, const ImcMacroConfig& cfg,
                               const SpatialMapping& m, double cache_capacity_bits) {
  if (!is_feasible(l, cfg, m)) {
    throw EvaluationError("infeasible mapping for layer '" + l.name + "'");
  }
  const LayerPrecision prec = resolve_precision(l, cfg);
  const std::uint64_t cycles_per_mvm = ceil_div(prec.b_i, cfg.b_cycle);
  const std::uint64_t rows = m.rows();
  const std::uint64_t cols = m.cols();

  MappingResult r;
  r.mapping = m;
  r.spatial_utilization = static_cast<double>(rows * cols) /
                          (static_cast<double>(cfg.d_i) * static_cast<double>(cfg.d_o));
  const std::uint64_t weight_tiles_per_group = ceil_div(l.k, m.k_u) * ceil_div(l.c, m.c_u) *
                                               ceil_div(l.fx, m.fx_u) * ceil_div(l.fy, m.fy_u);
  r.weight_tile_loads = l.g * weight_tiles_per_group;
  r.mvm_invocations = l.b * l.g * weight_tiles_per_group * ceil_div(l.ox, m.ox_u) * l.oy;
  r.total_cycles = r.mvm_invocations * cycles_per_mvm;

  Traffic& t = r.traffic;
  const double b_i = prec.b_i;
  const double b_w = prec.b_w;
  const double b_o = prec.b_o;
  t.w_dram_reads = static_cast<double>(l.weight_elements()) * b_w;
  t.w_macro_writes = static_cast<double>(r.weight_tile_loads) * static_cast<double>(rows) *
                     static_cast<double>(cols) * b_w;
  t.i_dram_reads = static_cast<double>(l.input_elements()) * b_i;
  t.i_cache_reads = static_cast<double>(r.mvm_invocations) * static_cast<double>(rows) * b_i;
  t.o_cache_writes = static_cast<double>(l.output_elements()) * b_o;
  t.o_dram_writes = t.o_cache_writes > cache_capacity_bits ? t.o_cache_writes : 0.0;

  r.in_unroll_ratio = static_cast<double>(rows) /
                      static_cast<double>(std::min(cfg.d_i, l.c * l.fx * l.fy));
  r.out_unroll_ratio = static_cast<double>(cols) /
                       static_cast<double>(std::min(cfg.d_o, l.k * l.ox));
  return r;
}

std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::Energy: return "energy";
    case Objective::Latency: return "latency";
    case Objective::Edp: return "edp";
  }
  return "energy";
}

Objective parse_objective(std::string_view s) {
  if (s == "energy") return Objective::Energy;
  if (s == "latency") return Objective::Latency;
  if (s == "edp") return Objective::Edp;
  throw ConfigError("unknown objective '" + std::string(s) + "' (expected energy, latency or edp)");
}

bool better_candidate(const ScoredMapping& a, const ScoredMapping& b) {
  if (a.score != b.score) return a.score < b.score;
  if (a.result.spatial_utilization != b.result.spatial_utilization) {
    return a.result.spatial_utilization > b.result.spatial_utilization;
  }
  return a.result.mapping < b.result.mapping;
}

ScoredMapping search_best_mapping(const Layer& layer, const ImcMacroConfig& cfg,
                                  double cache_capacity_bits, const MappingScore& score,
                                  Exec exec) {
  // Anything that can throw is checked here, outside the parallel region.
  resolve_precision(layer, cfg);
  const std::vector<SpatialMapping> candidates = enumerate_mappings(layer, cfg);
  const auto n = static_cast<std::int64_t>(candidates.size());
  std::vector<ScoredMapping> scored(candidates.size());

  auto eval = [&](std::int64_t i) {
    ScoredMapping& s = scored[static_cast<std::size_t>(i)];
    s.result = evaluate_mapping(layer, cfg, candidates[static_cast<std::size_t>(i)],
                                cache_capacity_bits);
    s.score = score(s.result);
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) eval(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) eval(i);
  }

  // Order-fixed reduction: the winner does not depend on thread timing.
  std::size_t best = 0;
  for (std::size_t i = 1; i < scored.size(); ++i) {
    if (better_candidate(scored[i], scored[best])) best = i;
  }
  return scored[best];
}

}  // namespace imcsim
