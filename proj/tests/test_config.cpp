#include <gtest/gtest.h>

#include "imcsim/config.hpp"
#include "imcsim/errors.hpp"

using namespace imcsim;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, EmptyObjectGivesDefaults) {
  const ProjectConfig c = parse_config("{}");
  EXPECT_EQ(c.params.k1, TechnologyParams{}.k1);
  EXPECT_EQ(c.aimc.b_cycle, 2);
  EXPECT_EQ(c.dimc.b_cycle, 1);
  EXPECT_EQ(c.dram_energy, 3.7e-12);
  EXPECT_EQ(c.cache.capacity, 256.0 * 1024 * 8);
}

TEST(Config, ShippedDefaultMatchesEmbeddedDefaults) {
  const ProjectConfig file = load_config(IMCSIM_DATA_DIR "/configs/default.json");
  const ProjectConfig embedded;
  for (ImcType t : {ImcType::Aimc, ImcType::Dimc}) {
    const SystemMetrics a = peak_system_metrics(file.system(t, 256));
    const SystemMetrics b = peak_system_metrics(embedded.system(t, 256));
    EXPECT_EQ(a.energy, b.energy);
    EXPECT_EQ(a.latency, b.latency);
    EXPECT_EQ(a.area, b.area);
  }
}

TEST(Config, OverridesApply) {
  const ProjectConfig c = parse_config(R"({
    "technology": {"v_dd": 0.8, "sram_cell_area": 0.5},
    "aimc": {"d_i": 256, "d_o": 128, "pipelined": true, "adc_input_bits": "full_input"},
    "dimc": {"type": "dimc", "b_cycle": 2},
    "system": {"dram_energy": 5e-12, "cache": {"capacity_bits": 1024, "bandwidth": 4096}}
  })");
  EXPECT_EQ(c.params.v_dd, 0.8);
  EXPECT_EQ(c.aimc.d_i, 256u);
  EXPECT_TRUE(c.aimc.pipelined);
  EXPECT_EQ(c.aimc.adc_input_bits, AdcInputBits::FullInput);
  EXPECT_EQ(c.dimc.b_cycle, 2);
  EXPECT_EQ(c.cache.capacity, 1024.0);
  const SystemConfig sized = c.system(ImcType::Aimc, 64);
  EXPECT_EQ(sized.macro.d_i, 64u);
  EXPECT_EQ(sized.macro.d_o, 64u);
  EXPECT_EQ(sized.dram_energy, 5e-12);
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"technology": {"kk": 1}})").find("unknown field 'kk'"), std::string::npos);
  EXPECT_NE(error_of(R"({"foo": {}})").find("unknown field 'foo'"), std::string::npos);
  EXPECT_NE(error_of(R"({"aimc": {"d_i": "big"}})").find("aimc.d_i"), std::string::npos);
  EXPECT_NE(error_of(R"({"aimc": {"d_i": -4}})").find("aimc.d_i"), std::string::npos);
  EXPECT_NE(error_of(R"({"aimc": {"type": "dimc"}})").find("aimc.type"), std::string::npos);
  EXPECT_NE(error_of(R"({"aimc": {"adc_input_bits": "x"}})").find("adc_input_bits"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"technology": {"v_dd": -1}})").find("v_dd"), std::string::npos);
  EXPECT_NE(error_of(R"({"technology": {"adc_fs": 2}})").find("adc_fs"), std::string::npos);
  EXPECT_NE(error_of(R"({"dimc": {"weight_sparsity": 2}})").find("weight_sparsity"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"system": {"cache": {"bandwidth": 10}}})").find("bandwidth"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"system": {"cache": {"size": 10}}})").find("unknown field 'size'"),
            std::string::npos);
  EXPECT_NE(error_of("{").find("parse error"), std::string::npos);
  EXPECT_NE(error_of("[]").find("expected an object"), std::string::npos);
}

TEST(Config, MissingFile) { EXPECT_THROW(load_config("/nonexistent.json"), ConfigError); }
