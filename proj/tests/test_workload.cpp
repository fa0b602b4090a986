#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "gen.hpp"
#include "imcsim/errors.hpp"
#include "imcsim/workload.hpp"

using namespace imcsim;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_network(text, "net.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Classify, KnownFixtures) {
  EXPECT_EQ(classify(fixtures::fc_autoencoder()), LayerKind::Fc);
  EXPECT_EQ(classify(fixtures::pw_mobilenet()), LayerKind::Pw);
  EXPECT_EQ(classify(fixtures::dw_dscnn()), LayerKind::Dw);
  EXPECT_EQ(classify(fixtures::conv_resnet8()), LayerKind::Conv);
}

TEST(Classify, OtherAndPrecedence) {
  Layer grouped;
  grouped.g = 4;
  grouped.k = 2;
  grouped.fx = 3;
  EXPECT_EQ(classify(grouped), LayerKind::Other);
  // g > 1 and everything else 1: dw wins over fc because fc requires g = 1.
  Layer dw1;
  dw1.g = 2;
  EXPECT_EQ(classify(dw1), LayerKind::Dw);
  EXPECT_EQ(classify(Layer{}), LayerKind::Fc);
}

TEST(Classify, TotalOverRandomLayers) {
  gen::Rng r(17);
  for (int i = 0; i < 200; ++i) {
    const Layer l = gen::small_layer(r, 8);
    const LayerKind k = classify(l);
    EXPECT_EQ(k, classify(l));
    if (k == LayerKind::Fc) EXPECT_EQ(l.ox * l.oy * l.fx * l.fy * l.g, 1u);
    if (k == LayerKind::Conv) EXPECT_GT(l.fx * l.fy, 1u);
  }
}

TEST(TotalMacs, WorkedValues) {
  EXPECT_EQ(total_macs(fixtures::fc_autoencoder()), 81920u);
  EXPECT_EQ(total_macs(fixtures::conv_resnet8()), 2359296u);
  EXPECT_EQ(total_macs(Layer{}), 1u);
}

TEST(TotalMacs, OverflowIsAnError) {
  Layer l;
  l.k = l.c = l.ox = l.oy = 1u << 20;
  EXPECT_THROW(total_macs(l), EvaluationError);
}

TEST(TotalMacs, InvariantUnderLoopPermutation) {
  gen::Rng r(2);
  for (int i = 0; i < 50; ++i) {
    std::array<std::uint64_t, 8> v{};
    for (auto& x : v) x = r.uint(1, 9);
    const auto make = [](const std::array<std::uint64_t, 8>& a) {
      Layer l;
      l.b = a[0], l.g = a[1], l.k = a[2], l.c = a[3];
      l.ox = a[4], l.oy = a[5], l.fx = a[6], l.fy = a[7];
      return l;
    };
    const std::uint64_t want = total_macs(make(v));
    for (int s = 0; s < 5; ++s) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      std::swap(v[0], v[r.uint(0, 7)]);
      EXPECT_EQ(total_macs(make(v)), want);
    }
  }
}

TEST(Layer, TensorSizes) {
  Layer l = fixtures::conv_resnet8();
  EXPECT_EQ(l.ix(), 34u);
  EXPECT_EQ(l.input_elements(), 16u * 34 * 34);
  EXPECT_EQ(l.weight_elements(), 16u * 16 * 9);
  EXPECT_EQ(l.output_elements(), 16u * 32 * 32);
  l.sx = 2;
  EXPECT_EQ(l.ix(), 65u);
}

TEST(ParseNetwork, FourLayerFile) {
  const Network n = load_network(IMCSIM_DATA_DIR "/workloads/tinyml_layers.json");
  ASSERT_EQ(n.layers.size(), 4u);
  EXPECT_EQ(n.name, "tinyml_layers");
  const auto fixtures = fixtures::all();
  for (std::size_t i = 0; i < 4; ++i) {
    const Layer& a = n.layers[i].layer;
    const Layer& b = fixtures[i];
    EXPECT_EQ(a.name, b.name);
    EXPECT_EQ(total_macs(a), total_macs(b));
    EXPECT_EQ(classify(a), classify(b));
    EXPECT_EQ(a.input_elements(), b.input_elements());
  }
}

TEST(ParseNetwork, DefaultsAndRepeat) {
  const Network n = parse_network(
      R"({"layers": [{"K": 4, "repeat": 3, "b_i": 4}, {"C": 2}]})", "x");
  ASSERT_EQ(n.layers.size(), 2u);
  EXPECT_EQ(n.layers[0].repeat, 3u);
  EXPECT_EQ(n.layers[0].layer.b_i, 4);
  EXPECT_FALSE(n.layers[0].layer.b_w.has_value());
  EXPECT_EQ(n.layers[1].layer.name, "layer1");
  EXPECT_EQ(n.layers[1].layer.sx, 1u);
}

TEST(ParseNetwork, EmptyLayerList) {
  EXPECT_EQ(error_of(R"({"layers": []})"), "network must contain at least one layer");
}

TEST(ParseNetwork, ViolationsNameEveryField) {
  const std::string msg = error_of(R"({"layers": [{"K": -2, "OX": 0}]})");
  EXPECT_NE(msg.find("layers[0].K"), std::string::npos) << msg;
  EXPECT_NE(msg.find("layers[0].OX"), std::string::npos) << msg;
}

TEST(ParseNetwork, SchemaErrors) {
  EXPECT_NE(error_of(R"({"layers": [{"KK": 1}]})").find("unknown field 'KK'"), std::string::npos);
  EXPECT_NE(error_of(R"({"layers": [], "extra": 1})").find("unknown field"), std::string::npos);
  EXPECT_NE(error_of(R"({"layers": [{"K": 1.5}]})").find("expected an integer"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"layers": [{"name": 3}]})").find("expected a string"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"layers": [{"b_w": 0}]})").find("b_w"), std::string::npos);
  EXPECT_NE(error_of("{\"layers\": [\n{\"K\": }]}").find("parse error"), std::string::npos);
  EXPECT_NE(error_of("[]").find("top level"), std::string::npos);
  EXPECT_NE(error_of("{}").find("'layers'"), std::string::npos);
}

TEST(ParseNetwork, MissingFile) {
  EXPECT_THROW(load_network("/nonexistent/net.json"), ConfigError);
}
