#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace imcsim {

// One DNN layer as an 8-deep loop nest: B, G, K, C, OX, OY, FX, FY.
// K and C are per group.
struct Layer {
  std::string name;
  std::uint64_t b = 1;
  std::uint64_t g = 1;
  std::uint64_t k = 1;
  std::uint64_t c = 1;
  std::uint64_t ox = 1;
  std::uint64_t oy = 1;
  std::uint64_t fx = 1;
  std::uint64_t fy = 1;
  std::uint64_t sx = 1;
  std::uint64_t sy = 1;
  std::optional<int> b_i;
  std::optional<int> b_w;
  std::optional<int> b_o;

  [[nodiscard]] std::uint64_t ix() const { return (ox - 1) * sx + fx; }
  [[nodiscard]] std::uint64_t iy() const { return (oy - 1) * sy + fy; }
  [[nodiscard]] std::uint64_t input_elements() const { return b * g * c * ix() * iy(); }
  [[nodiscard]] std::uint64_t weight_elements() const { return g * k * c * fx * fy; }
  [[nodiscard]] std::uint64_t output_elements() const { return b * g * k * ox * oy; }

  // Lists every violated invariant; empty when valid.
  [[nodiscard]] std::vector<std::string> violations() const;
};

enum class LayerKind { Fc, Pw, Dw, Conv, Other };

std::string_view to_string(LayerKind k);

LayerKind classify(const Layer& layer);

// Product of all eight loop bounds; throws EvaluationError on overflow.
std::uint64_t total_macs(const Layer& layer);

struct NetworkEntry {
  Layer layer;
  std::uint64_t repeat = 1;
};

struct Network {
  std::string name;
  std::vector<NetworkEntry> layers;
};

// Parses the JSON network format (see README); throws ConfigError with the
// offending field path on schema or invariant violations.
Network parse_network(std::string_view json_text, const std::string& source = "<string>");
Network load_network(const std::filesystem::path& path);

// Layer shapes used throughout the benchmarks (batch 1, stride 1).
namespace fixtures {
Layer fc_autoencoder();
Layer pw_mobilenet();
Layer dw_dscnn();
Layer conv_resnet8();
std::vector<Layer> all();
}  // namespace fixtures

}  // namespace imcsim
