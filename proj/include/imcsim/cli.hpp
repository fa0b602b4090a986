#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "imcsim/mapper.hpp"
#include "imcsim/report.hpp"

namespace imcsim {

enum class Command { Peak, Layer, Network, Sweep, Validate };
enum class TypeSelection { Aimc, Dimc, Both };

struct RunSpec {
  Command command = Command::Peak;
  std::optional<std::filesystem::path> config;
  std::vector<std::filesystem::path> workloads;
  // Empty means: the configured array size (sweep: 32..1024).
  std::vector<std::uint64_t> sizes;
  TypeSelection type = TypeSelection::Both;
  Objective objective = Objective::Energy;
  Format format = Format::Csv;
  std::optional<std::filesystem::path> out;
  int jobs = 0;  // 0: OpenMP default
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitEvaluation = 3;

// Name of the environment variable holding the default config directory.
inline constexpr const char* kConfigDirEnv = "IMCSIM_CONFIG_DIR";

// Accepts "32,64,128" or a power-of-two range "32..1024". Throws
// std::invalid_argument on anything else.
std::vector<std::uint64_t> parse_sizes(const std::string& text);

// Evaluates `spec` and writes the table to spec.out (atomically) or `out`.
// Diagnostics and model warnings go to `err`.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

// argv front end used by the imcsim binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace imcsim
