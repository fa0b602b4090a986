#include "imcsim/workload.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "imcsim/errors.hpp"

namespace imcsim {

using nlohmann::json;

std::vector<std::string> Layer::violations() const {
  std::vector<std::string> out;
  const std::pair<const char*, std::uint64_t> bounds[] = {
      {"B", b}, {"G", g}, {"K", k}, {"C", c}, {"OX", ox},
      {"OY", oy}, {"FX", fx}, {"FY", fy}, {"SX", sx}, {"SY", sy}};
  for (const auto& [field, v] : bounds) {
    if (v < 1) out.push_back(std::string(field) + " must be >= 1");
  }
  const std::pair<const char*, std::optional<int>> precisions[] = {
      {"b_i", b_i}, {"b_w", b_w}, {"b_o", b_o}};
  for (const auto& [field, v] : precisions) {
    if (v && *v < 1) out.push_back(std::string(field) + " must be >= 1");
  }
  return out;
}

std::string_view to_string(LayerKind k) {
  switch (k) {
    case LayerKind::Fc: return "fc";
    case LayerKind::Pw: return "pw";
    case LayerKind::Dw: return "dw";
    case LayerKind::Conv: return "conv";
    case LayerKind::Other: return "other";
  }
  return "other";
}

LayerKind classify(const Layer& l) {
  if (l.ox == 1 && l.oy == 1 && l.fx == 1 && l.fy == 1 && l.g == 1) return LayerKind::Fc;
  if (l.k == 1 && l.c == 1 && l.g > 1) return LayerKind::Dw;
  if (l.fx == 1 && l.fy == 1 && l.g == 1 && l.ox * l.oy > 1) return LayerKind::Pw;
  if (l.fx * l.fy > 1 && l.g == 1) return LayerKind::Conv;
  return LayerKind::Other;
}

std::uint64_t total_macs(const Layer& l) {
  std::uint64_t acc = 1;
  for (std::uint64_t v : {l.b, l.g, l.k, l.c, l.ox, l.oy, l.fx, l.fy}) {
    if (__builtin_mul_overflow(acc, v, &acc)) {
      throw EvaluationError("total MAC count of layer '" + l.name + "' overflows 64 bits");
    }
  }
  return acc;
}

namespace {

const std::set<std::string> kLayerFields = {"name", "B", "G", "K", "C", "OX", "OY", "FX", "FY",
                                            "SX", "SY", "b_i", "b_w", "b_o", "repeat"};
const std::set<std::string> kNetworkFields = {"name", "layers"};

// Invariant violations are collected so one error lists all of them.
std::uint64_t read_bound(const json& j, const char* field, const std::string& where,
                         std::vector<std::string>& errors) {
  if (!j.contains(field)) return 1;
  const json& v = j.at(field);
  if (!v.is_number_integer()) {
    throw ConfigError(where + "." + field + ": expected an integer");
  }
  const auto x = v.get<std::int64_t>();
  if (x < 1) {
    errors.push_back(where + "." + field + ": must be >= 1 (got " + std::to_string(x) + ")");
    return 1;
  }
  return static_cast<std::uint64_t>(x);
}

std::optional<int> read_precision(const json& j, const char* field, const std::string& where) {
  if (!j.contains(field)) return std::nullopt;
  const json& v = j.at(field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || v.get<std::int64_t>() > 64) {
    throw ConfigError(where + "." + field + ": expected an integer in [1, 64]");
  }
  return v.get<int>();
}

}  // namespace

Network parse_network(std::string_view json_text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": parse error: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(source + ": top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (!kNetworkFields.contains(key)) {
      throw ConfigError(source + ": unknown field '" + key + "'");
    }
  }
  Network net;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ConfigError(source + ".name: expected a string");
    net.name = doc.at("name").get<std::string>();
  }
  if (!doc.contains("layers") || !doc.at("layers").is_array()) {
    throw ConfigError(source + ": 'layers' must be an array");
  }
  const json& layers = doc.at("layers");
  if (layers.empty()) throw ConfigError("network must contain at least one layer");

  for (std::size_t i = 0; i < layers.size(); ++i) {
    const json& lj = layers[i];
    const std::string where = source + ".layers[" + std::to_string(i) + "]";
    if (!lj.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : lj.items()) {
      if (!kLayerFields.contains(key)) {
        throw ConfigError(where + ": unknown field '" + key + "'");
      }
    }
    NetworkEntry e;
    Layer& l = e.layer;
    std::vector<std::string> errors;
    if (lj.contains("name") && !lj.at("name").is_string()) {
      throw ConfigError(where + ".name: expected a string");
    }
    l.name = lj.value("name", "layer" + std::to_string(i));
    l.b = read_bound(lj, "B", where, errors);
    l.g = read_bound(lj, "G", where, errors);
    l.k = read_bound(lj, "K", where, errors);
    l.c = read_bound(lj, "C", where, errors);
    l.ox = read_bound(lj, "OX", where, errors);
    l.oy = read_bound(lj, "OY", where, errors);
    l.fx = read_bound(lj, "FX", where, errors);
    l.fy = read_bound(lj, "FY", where, errors);
    l.sx = read_bound(lj, "SX", where, errors);
    l.sy = read_bound(lj, "SY", where, errors);
    l.b_i = read_precision(lj, "b_i", where);
    l.b_w = read_precision(lj, "b_w", where);
    l.b_o = read_precision(lj, "b_o", where);
    e.repeat = read_bound(lj, "repeat", where, errors);
    if (!errors.empty()) {
      std::string msg = "invalid layer:";
      for (const auto& err : errors) msg += "\n  " + err;
      throw ConfigError(msg);
    }
    total_macs(l);
    net.layers.push_back(std::move(e));
  }
  return net;
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open workload file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  Network net = parse_network(ss.str(), path.string());
  if (net.name.empty()) net.name = path.stem().string();
  return net;
}

namespace fixtures {

Layer fc_autoencoder() {
  Layer l;
  l.name = "fc";
  l.k = 128;
  l.c = 640;
  return l;
}

Layer pw_mobilenet() {
  Layer l;
  l.name = "pw";
  l.ox = 12;
  l.oy = 12;
  l.k = 64;
  l.c = 64;
  return l;
}

Layer dw_dscnn() {
  Layer l;
  l.name = "dw";
  l.g = 64;
  l.ox = 25;
  l.oy = 5;
  l.fx = 3;
  l.fy = 3;
  return l;
}

Layer conv_resnet8() {
  Layer l;
  l.name = "conv";
  l.ox = 32;
  l.oy = 32;
  l.k = 16;
  l.c = 16;
  l.fx = 3;
  l.fy = 3;
  return l;
}

std::vector<Layer> all() {
  return {fc_autoencoder(), pw_mobilenet(), dw_dscnn(), conv_resnet8()};
}

}  // namespace fixtures
}  // namespace imcsim
