#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imcsim/sweep.hpp"
#include "imcsim/system_model.hpp"
#include "imcsim/validation.hpp"

namespace imcsim {

// Empty cell -> blank in CSV, null in JSON.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };
Format parse_format(std::string_view s);

// CSV: header + rows, doubles with 6 significant digits, no locale.
std::string to_csv(const Table& t);
// JSON: array of objects, doubles at full round-trip precision.
std::string to_json(const Table& t);
std::string render(const Table& t, Format f);

Table peak_table(const std::vector<PeakRow>& rows);
Table layer_table(const std::vector<LayerRow>& rows, Objective objective);

struct NetworkRow {
  SystemConfig sys;
  NetworkEvaluation eval;
};
// Per-layer rows, one aggregate row per network, and a geomean row per
// design point when more than one network was evaluated.
Table network_table(const std::vector<NetworkRow>& rows, Objective objective);
Table validation_table(const std::vector<ValidationDesign>& designs,
                       const std::vector<MacroMetrics>& metrics);

}  // namespace imcsim
