#include "imcsim/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "imcsim/errors.hpp"

namespace imcsim {

using nlohmann::json;

namespace {

// Binds JSON keys of one section to struct fields and rejects anything else.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  void num(const char* key, double& dst) {
    seen(key);
    if (!j_.contains(key)) return;
    if (!j_.at(key).is_number()) throw ConfigError(where(key) + ": expected a number");
    dst = j_.at(key).get<double>();
  }

  template <class Int>
  void integer(const char* key, Int& dst) {
    seen(key);
    if (!j_.contains(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ConfigError(where(key) + ": expected a non-negative integer");
    }
    dst = static_cast<Int>(v.get<std::int64_t>());
  }

  void flag(const char* key, bool& dst) {
    seen(key);
    if (!j_.contains(key)) return;
    if (!j_.at(key).is_boolean()) throw ConfigError(where(key) + ": expected true/false");
    dst = j_.at(key).get<bool>();
  }

  std::optional<std::string> text(const char* key) {
    seen(key);
    if (!j_.contains(key)) return std::nullopt;
    if (!j_.at(key).is_string()) throw ConfigError(where(key) + ": expected a string");
    return j_.at(key).get<std::string>();
  }

  std::optional<Section> child(const char* key) {
    seen(key);
    if (!j_.contains(key)) return std::nullopt;
    return Section(j_.at(key), where(key));
  }

  // Call after all bindings.
  void reject_unknown() const {
    for (const auto& [key, _] : j_.items()) {
      if (!known_.contains(key)) throw ConfigError(path_ + ": unknown field '" + key + "'");
    }
  }

 private:
  void seen(const char* key) { known_[key] = true; }
  [[nodiscard]] std::string where(const char* key) const { return path_ + "." + key; }

  const json& j_;
  std::string path_;
  std::map<std::string, bool> known_;
};

void read_technology(Section s, TechnologyParams& p) {
  s.num("v_dd", p.v_dd);
  s.num("c_gate", p.c_gate);
  s.num("d_gate", p.d_gate);
  s.num("a_gate", p.a_gate);
  s.num("k1", p.k1);
  s.num("k2", p.k2);
  s.num("k3", p.k3);
  s.num("k4", p.k4);
  s.num("k5", p.k5);
  s.num("k6", p.k6);
  s.num("k7", p.k7);
  s.num("fa_energy_ratio", p.fa_energy_ratio);
  s.num("dff_energy_ratio", p.dff_energy_ratio);
  s.num("fa_sum_delay_ratio", p.fa_sum_delay_ratio);
  s.num("fa_carry_delay_ratio", p.fa_carry_delay_ratio);
  s.num("fa_area_ratio", p.fa_area_ratio);
  s.num("dff_area_ratio", p.dff_area_ratio);
  s.num("sram_cell_area", p.sram_cell_area);
  s.num("sram_cell_write_energy", p.sram_cell_write_energy);
  s.num("adc_fs", p.adc_fs);
  s.num("adc_k", p.adc_k);
  s.reject_unknown();
}

void read_macro(Section s, ImcMacroConfig& m, ImcType expected, const std::string& path) {
  if (auto t = s.text("type"); t && parse_imc_type(*t) != expected) {
    throw ConfigError(path + ".type: section holds a " + std::string(to_string(expected)) +
                      " macro");
  }
  s.integer("b_i", m.b_i);
  s.integer("b_w", m.b_w);
  s.integer("b_cycle", m.b_cycle);
  s.integer("b_o", m.b_o);
  s.integer("d_i", m.d_i);
  s.integer("d_o", m.d_o);
  s.integer("m", m.m);
  s.integer("n_macros", m.n_macros);
  s.num("input_toggle_rate", m.input_toggle_rate);
  s.num("weight_sparsity", m.weight_sparsity);
  s.flag("pipelined", m.pipelined);
  if (auto mode = s.text("adc_input_bits")) {
    if (*mode == "per_cycle") {
      m.adc_input_bits = AdcInputBits::PerCycle;
    } else if (*mode == "full_input") {
      m.adc_input_bits = AdcInputBits::FullInput;
    } else {
      throw ConfigError(path + ".adc_input_bits: expected per_cycle or full_input");
    }
  }
  s.reject_unknown();
  m.validate();
}

void read_system(Section s, ProjectConfig& cfg) {
  s.num("dram_energy", cfg.dram_energy);
  if (auto c = s.child("cache")) {
    if (auto name = c->text("name")) cfg.cache.name = *name;
    c->num("capacity_bits", cfg.cache.capacity);
    c->num("read_energy", cfg.cache.read_energy);
    c->num("write_energy", cfg.cache.write_energy);
    c->num("area", cfg.cache.area);
    c->num("bandwidth", cfg.cache.bandwidth);
    c->reject_unknown();
  }
  s.reject_unknown();
}

}  // namespace

SystemConfig ProjectConfig::system(ImcType t, std::optional<std::uint64_t> size) const {
  SystemConfig sys;
  sys.params = params;
  sys.macro = macro(t);
  if (size) {
    sys.macro.d_i = *size;
    sys.macro.d_o = *size;
  }
  sys.cache = cache;
  sys.dram_energy = dram_energy;
  return sys;
}

ProjectConfig parse_config(std::string_view json_text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": parse error: " + e.what());
  }
  ProjectConfig cfg;
  Section root(doc, source);
  if (auto s = root.child("technology")) read_technology(*s, cfg.params);
  if (auto s = root.child("aimc")) read_macro(*s, cfg.aimc, ImcType::Aimc, source + ".aimc");
  if (auto s = root.child("dimc")) read_macro(*s, cfg.dimc, ImcType::Dimc, source + ".dimc");
  if (auto s = root.child("system")) read_system(*s, cfg);
  root.reject_unknown();

  cfg.params.validate();
  validate(cfg.system(ImcType::Aimc));
  validate(cfg.system(ImcType::Dimc));
  return cfg;
}

ProjectConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

}  // namespace imcsim
