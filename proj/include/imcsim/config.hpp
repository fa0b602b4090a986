#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "imcsim/macro_model.hpp"
#include "imcsim/system_model.hpp"
#include "imcsim/technology.hpp"

namespace imcsim {

// Everything a run needs besides the workload. Every field has a default, so
// an empty JSON object is a valid configuration.
struct ProjectConfig {
  TechnologyParams params;
  ImcMacroConfig aimc = default_macro(ImcType::Aimc, 32);
  ImcMacroConfig dimc = default_macro(ImcType::Dimc, 32);
  MemoryLevel cache;
  double dram_energy = 3.7e-12;

  [[nodiscard]] const ImcMacroConfig& macro(ImcType t) const {
    return t == ImcType::Aimc ? aimc : dimc;
  }
  // System around one macro type; `size` makes the array square.
  [[nodiscard]] SystemConfig system(ImcType t, std::optional<std::uint64_t> size = {}) const;
};

// Throws ConfigError (unknown fields, wrong types, invariant violations).
ProjectConfig parse_config(std::string_view json_text, const std::string& source = "<string>");
ProjectConfig load_config(const std::filesystem::path& path);

}  // namespace imcsim
