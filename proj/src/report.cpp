#include "imcsim/report.hpp"

#include <fmt/format.h>

#include <map>
#include <nlohmann/json.hpp>

#include "imcsim/errors.hpp"

namespace imcsim {
namespace {

using Row = std::vector<Cell>;

std::vector<std::string> energy_keys() {
  std::vector<std::string> keys(kMacroComponents.begin(), kMacroComponents.end());
  keys.insert(keys.end(), {kCache, kDram, kWeightLoad});
  return keys;
}

std::vector<std::string> area_keys() {
  std::vector<std::string> keys(kMacroComponents.begin(), kMacroComponents.end());
  keys.emplace_back(kCache);
  return keys;
}

double lookup(const std::map<std::string, double>& m, const std::string& key) {
  auto it = m.find(key);
  return it == m.end() ? 0.0 : it->second;
}

Cell i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Metrics carry ops/s; tables report TOP/s.
double tera(double v) { return v / 1e12; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void add_point_columns(std::vector<std::string>& cols) {
  cols.insert(cols.end(), {"type", "d_i", "d_o", "b_i", "b_w", "b_cycle", "m", "n_macros"});
}

void add_point_cells(Row& r, const ImcMacroConfig& m) {
  r.insert(r.end(), {std::string(to_string(m.imc_type)), i64(m.d_i), i64(m.d_o),
                     std::int64_t{m.b_i}, std::int64_t{m.b_w}, std::int64_t{m.b_cycle},
                     i64(m.m), i64(m.n_macros)});
}

const std::vector<std::string> kMetricColumns = {
    "macs", "energy_j", "latency_s", "area_um2", "energy_per_mac_j",
    "tops", "tops_per_w", "tops_per_mm2", "stall_s"};

void add_metric_cells(Row& r, const SystemMetrics& m) {
  r.insert(r.end(), {m.macs, m.energy, m.latency, m.area, m.energy / m.macs, tera(m.tops),
                     tera(m.tops_per_w), tera(m.tops_per_mm2),
                     lookup(m.delay_breakdown, kWeightLoadStall)});
  for (const auto& k : energy_keys()) r.emplace_back(lookup(m.energy_breakdown, k));
}

const std::vector<std::string> kMappingColumns = {
    "k_u", "ox_u", "c_u", "fx_u", "fy_u", "spatial_utilization", "in_unroll_ratio",
    "out_unroll_ratio", "mvm_invocations", "total_cycles", "weight_tile_loads", "w_dram_bits",
    "w_macro_bits", "i_dram_bits", "i_cache_bits", "o_cache_bits", "o_dram_bits"};

void add_mapping_cells(Row& r, const MappingResult& mr) {
  const SpatialMapping& s = mr.mapping;
  const Traffic& t = mr.traffic;
  r.insert(r.end(), {i64(s.k_u), i64(s.ox_u), i64(s.c_u), i64(s.fx_u), i64(s.fy_u),
                     mr.spatial_utilization, mr.in_unroll_ratio, mr.out_unroll_ratio,
                     i64(mr.mvm_invocations), i64(mr.total_cycles), i64(mr.weight_tile_loads),
                     t.w_dram_reads, t.w_macro_writes, t.i_dram_reads, t.i_cache_reads,
                     t.o_cache_writes, t.o_dram_writes});
}

void add_blank(Row& r, std::size_t n) { r.insert(r.end(), n, Cell{}); }

std::vector<std::string> workload_columns() {
  std::vector<std::string> cols = {"scope"};
  add_point_columns(cols);
  cols.insert(cols.end(), {"objective", "network", "layer", "kind", "repeat"});
  cols.insert(cols.end(), kMappingColumns.begin(), kMappingColumns.end());
  cols.insert(cols.end(), kMetricColumns.begin(), kMetricColumns.end());
  for (const auto& k : energy_keys()) cols.push_back("e_" + k + "_j");
  return cols;
}

Row layer_row(const SystemConfig& sys, Objective obj, const std::string& network,
              const Layer& layer, std::uint64_t repeat, const LayerEvaluation& ev) {
  Row r = {std::string("layer")};
  add_point_cells(r, sys.macro);
  r.insert(r.end(), {std::string(to_string(obj)), network, layer.name,
                     std::string(to_string(classify(layer))), i64(repeat)});
  add_mapping_cells(r, ev.mapping);
  add_metric_cells(r, ev.metrics);
  return r;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected csv or json)");
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const Row& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::string>) {
              out += csv_escape(v);
            } else if constexpr (std::is_same_v<V, double>) {
              out += fmt::format("{:.6g}", v);
            } else if constexpr (std::is_same_v<V, std::int64_t>) {
              out += fmt::format("{}", v);
            }
          },
          row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Row& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::monostate>) {
              obj[t.columns[i]] = nullptr;
            } else {
              obj[t.columns[i]] = v;
            }
          },
          row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render(const Table& t, Format f) {
  return f == Format::Csv ? to_csv(t) : to_json(t);
}

Table peak_table(const std::vector<PeakRow>& rows) {
  Table t;
  add_point_columns(t.columns);
  t.columns.insert(t.columns.end(),
                   {"adc_res", "cycles_per_mvm", "clock_period_s", "macro_energy_per_mvm_j",
                    "macro_energy_per_mac_j", "macro_area_um2", "macro_tops", "macro_tops_per_w",
                    "macro_tops_per_mm2", "system_energy_j", "system_latency_s",
                    "system_area_um2", "system_tops", "system_tops_per_w",
                    "system_tops_per_mm2"});
  for (const auto& k : energy_keys()) t.columns.push_back("e_" + k + "_j");
  for (const auto& k : area_keys()) t.columns.push_back("a_" + k + "_um2");

  for (const PeakRow& pr : rows) {
    const MacroMetrics& m = pr.macro;
    const SystemMetrics& s = pr.system;
    Row r;
    add_point_cells(r, pr.sys.macro);
    r.insert(r.end(), {std::int64_t{m.adc_resolution}, std::int64_t{m.cycles_per_mvm},
                       m.clock_period, m.energy_per_mvm,
                       m.energy_per_mvm / pr.sys.macro.macs_per_mvm(), m.area, tera(m.tops),
                       tera(m.tops_per_w), tera(m.tops_per_mm2), s.energy, s.latency, s.area,
                       tera(s.tops), tera(s.tops_per_w), tera(s.tops_per_mm2)});
    for (const auto& k : energy_keys()) r.emplace_back(lookup(s.energy_breakdown, k));
    for (const auto& k : area_keys()) r.emplace_back(lookup(s.area_breakdown, k));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table layer_table(const std::vector<LayerRow>& rows, Objective objective) {
  Table t;
  t.columns = workload_columns();
  for (const LayerRow& lr : rows) {
    t.rows.push_back(layer_row(lr.sys, objective, lr.network, lr.layer, lr.repeat, lr.eval));
  }
  return t;
}

Table network_table(const std::vector<NetworkRow>& rows, Objective objective) {
  Table t;
  t.columns = workload_columns();
  const std::size_t n_cols = t.columns.size();

  // Rows arrive point-major; a geomean row closes each design point group.
  std::vector<NetworkEvaluation> group;
  auto flush = [&](const SystemConfig& sys) {
    if (group.size() < 2) {
      group.clear();
      return;
    }
    const GeomeanMetrics g = geomean(group);
    Row r = {std::string("geomean")};
    add_point_cells(r, sys.macro);
    r.insert(r.end(), {std::string(to_string(objective)), std::string("*")});
    add_blank(r, 3 + kMappingColumns.size());
    add_blank(r, 5);
    r.insert(r.end(), {tera(g.tops), tera(g.tops_per_w), tera(g.tops_per_mm2)});
    add_blank(r, n_cols - r.size());
    t.rows.push_back(std::move(r));
    group.clear();
  };

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const NetworkRow& nr = rows[i];
    for (const NetworkLayerRow& lr : nr.eval.layers) {
      t.rows.push_back(layer_row(nr.sys, objective, nr.eval.name, lr.layer, lr.repeat, lr.eval));
    }
    Row r = {std::string("network")};
    add_point_cells(r, nr.sys.macro);
    r.insert(r.end(), {std::string(to_string(objective)), nr.eval.name});
    add_blank(r, 3 + kMappingColumns.size());
    add_metric_cells(r, nr.eval.total);
    t.rows.push_back(std::move(r));

    group.push_back(nr.eval);
    const bool last_of_point =
        i + 1 == rows.size() || rows[i + 1].sys.macro.imc_type != nr.sys.macro.imc_type ||
        rows[i + 1].sys.macro.d_i != nr.sys.macro.d_i ||
        rows[i + 1].sys.macro.d_o != nr.sys.macro.d_o;
    if (last_of_point) flush(nr.sys);
  }
  return t;
}

Table validation_table(const std::vector<ValidationDesign>& designs,
                       const std::vector<MacroMetrics>& metrics) {
  Table t;
  t.columns = {"index", "ref", "type", "precision", "d_i", "d_o", "m", "n_macros", "pipelined",
               "adc_res", "energy_per_mac_j", "clock_period_s", "area_um2", "macro_tops",
               "macro_tops_per_w", "macro_tops_per_mm2"};
  for (std::size_t i = 0; i < designs.size(); ++i) {
    const ImcMacroConfig& c = designs[i].macro;
    const MacroMetrics& m = metrics[i];
    t.rows.push_back({std::int64_t{designs[i].index}, designs[i].ref,
                      std::string(to_string(c.imc_type)),
                      fmt::format("{}/{}/{}", c.b_i, c.b_w, c.b_cycle), i64(c.d_i), i64(c.d_o),
                      i64(c.m), i64(c.n_macros), std::int64_t{c.pipelined ? 1 : 0},
                      std::int64_t{m.adc_resolution}, m.energy_per_mvm / c.macs_per_mvm(),
                      m.clock_period, m.area, tera(m.tops), tera(m.tops_per_w),
                      tera(m.tops_per_mm2)});
  }
  return t;
}

}  // namespace imcsim
