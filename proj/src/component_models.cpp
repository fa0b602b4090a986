#include "imcsim/component_models.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "imcsim/errors.hpp"

namespace imcsim {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

void require_fraction(double f, const char* what) {
  if (!(f >= 0.0 && f <= 1.0)) throw DomainError(what);
}

}  // namespace

ComponentCost replicate(const ComponentCost& c, double n) {
  return {c.energy * n, c.delay, c.area * n};
}

bool is_power_of_two(std::uint64_t x) { return std::has_single_bit(x); }

int ceil_log2(std::uint64_t x) {
  if (x == 0) throw DomainError("ceil_log2 of zero");
  return static_cast<int>(std::bit_width(x - 1));
}

std::uint64_t next_power_of_two(std::uint64_t x) {
  if (x == 0) throw DomainError("next_power_of_two of zero");
  return std::bit_ceil(x);
}

double cell_array_energy(const TechnologyParams& p, int b_w, std::uint64_t d_i,
                         std::uint64_t d_o, double activity) {
  require(b_w >= 1 && d_i >= 1 && d_o >= 1,
          "cell_array_energy: dimensions must be >= 1");
  require_fraction(activity, "cell_array_energy: activity must be in [0,1]");
  const double c_cell = 0.5 * p.c_gate;
  return c_cell * p.v_dd * p.v_dd * static_cast<double>(b_w) *
         static_cast<double>(d_i) * static_cast<double>(d_o) * activity;
}

int adc_resolution(const TechnologyParams& p, int input_bits, std::uint64_t d_i) {
  require(d_i >= 1, "adc_resolution: d_i must be >= 1");
  require(input_bits >= 1, "adc_resolution: input bits must be >= 1");
  const double exact = static_cast<double>(input_bits) +
                       std::log2(p.adc_k * p.adc_fs *
                                 std::sqrt(static_cast<double>(d_i)));
  // Absorb rounding noise so exact integers are not bumped up a bit.
  const int res = static_cast<int>(std::ceil(exact - 1e-9));
  return res < 1 ? 1 : res;
}

double adc_energy(const TechnologyParams& p, int res) {
  require(res >= 1, "adc_energy: resolution must be >= 1");
  const double r = res;
  return (p.k1 * r + p.k2 * std::pow(4.0, r)) * p.v_dd * p.v_dd;
}

double adc_delay(const TechnologyParams& p, int res, std::uint64_t d_i) {
  require(res >= 1, "adc_delay: resolution must be >= 1");
  require(d_i >= 1, "adc_delay: d_i must be >= 1");
  return (p.k3 * static_cast<double>(d_i) + p.k4) * static_cast<double>(res);
}

double adc_area(const TechnologyParams& p, int res) {
  require(res >= 1, "adc_area: resolution must be >= 1");
  const double r = res;
  return std::pow(10.0, -p.k5 * r + p.k6) * std::pow(2.0, r);
}

double dac_energy(const TechnologyParams& p, int res) {
  require(res >= 1, "dac_energy: resolution must be >= 1");
  return p.k7 * static_cast<double>(res) * p.v_dd * p.v_dd;
}

ComponentCost multiplier_cost(const TechnologyParams& p) {
  return {0.5 * p.gate_energy(), p.d_gate, p.a_gate};
}

std::uint64_t adder_tree_fa_count(std::uint64_t fan_in, int b_in) {
  require(b_in >= 1, "adder_tree_fa_count: b_in must be >= 1");
  if (fan_in == 0 || !is_power_of_two(fan_in)) {
    throw DomainError("adder_tree_fa_count: fan_in " + std::to_string(fan_in) +
                      " is not a power of two");
  }
  const int levels = std::countr_zero(fan_in);
  std::uint64_t total = 0;
  for (int n = 1; n <= levels; ++n) {
    total += static_cast<std::uint64_t>(b_in + n - 1) * (fan_in >> n);
  }
  return total;
}

int adder_tree_output_bits(std::uint64_t fan_in, int b_in) {
  return b_in + ceil_log2(fan_in);
}

ComponentCost adder_tree_cost(const TechnologyParams& p, std::uint64_t fan_in,
                              int b_in, double activity) {
  require_fraction(activity, "adder_tree_cost: activity must be in [0,1]");
  const auto n_fa = static_cast<double>(adder_tree_fa_count(fan_in, b_in));
  if (fan_in == 1) return {};
  const int depth = ceil_log2(fan_in);
  return {p.fa_energy() * n_fa * activity,
          p.fa_sum_delay() * depth + p.fa_carry_delay() * (b_in + depth),
          p.fa_area() * n_fa};
}

ComponentCost padded_adder_tree_cost(const TechnologyParams& p,
                                     std::uint64_t fan_in, int b_in,
                                     double activity) {
  require(fan_in >= 1, "adder tree fan-in must be >= 1");
  const std::uint64_t padded = next_power_of_two(fan_in);
  ComponentCost c = adder_tree_cost(p, padded, b_in, activity);
  const double scale = static_cast<double>(fan_in) / static_cast<double>(padded);
  c.energy *= scale;
  c.area *= scale;
  return c;
}

ComponentCost accumulator_cost(const TechnologyParams& p, int b_acc,
                               int b_adds_out) {
  require(b_adds_out >= 0, "accumulator_cost: b_adds_out must be >= 0");
  require(b_acc >= b_adds_out, "accumulator_cost: b_acc must be >= b_adds_out");
  const double bits = b_acc;
  return {(p.fa_energy() + p.dff_energy()) * bits,
          p.fa_carry_delay() * static_cast<double>(b_acc - b_adds_out),
          (p.fa_area() + p.dff_area()) * bits};
}

ComponentCost register_cost(const TechnologyParams& p, std::uint64_t n_bits) {
  const auto n = static_cast<double>(n_bits);
  return {p.dff_energy() * n, 0.0, p.dff_area() * n};
}

double sram_array_area(const TechnologyParams& p, std::uint64_t n_cells) {
  return static_cast<double>(n_cells) * p.sram_cell_area;
}

}  // namespace imcsim
