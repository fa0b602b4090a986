#pragma once

#include <cstdint>

#include "imcsim/technology.hpp"

namespace imcsim {

// Energy (J), delay (s) and area (um^2) of one hardware component.
struct ComponentCost {
  double energy = 0.0;
  double delay = 0.0;
  double area = 0.0;

  ComponentCost& operator+=(const ComponentCost& o) {
    energy += o.energy;
    delay += o.delay;
    area += o.area;
    return *this;
  }
  friend bool operator==(const ComponentCost&, const ComponentCost&) = default;
};

// Scales energy and area by `n` copies; delay is unchanged (parallel copies).
ComponentCost replicate(const ComponentCost& c, double n);

bool is_power_of_two(std::uint64_t x);
// ceil(log2(x)) for x >= 1.
int ceil_log2(std::uint64_t x);
std::uint64_t next_power_of_two(std::uint64_t x);

// Bitline charge/discharge energy of one MVM cycle, 0.5*Cgate per cell.
double cell_array_energy(const TechnologyParams& p, int b_w, std::uint64_t d_i,
                         std::uint64_t d_o, double activity);

// SAR ADC resolution needed to resolve a `d_i`-term analog sum of
// `input_bits`-wide operands, rounded up and clamped to >= 1.
int adc_resolution(const TechnologyParams& p, int input_bits, std::uint64_t d_i);

double adc_energy(const TechnologyParams& p, int res);
// Bitline settling plus bit-by-bit conversion.
double adc_delay(const TechnologyParams& p, int res, std::uint64_t d_i);
double adc_area(const TechnologyParams& p, int res);

// DAC delay and area are neglected.
double dac_energy(const TechnologyParams& p, int res);

// One NAND2 acting as a 1b x 1b multiplier.
ComponentCost multiplier_cost(const TechnologyParams& p);

// Full adders in a ripple-carry reduction tree of `fan_in` operands, each
// `b_in` bits wide, where every level widens the operands by one bit.
// `fan_in` must be a power of two.
std::uint64_t adder_tree_fa_count(std::uint64_t fan_in, int b_in);

// Output width of the tree: b_in + log2(fan_in).
int adder_tree_output_bits(std::uint64_t fan_in, int b_in);

ComponentCost adder_tree_cost(const TechnologyParams& p, std::uint64_t fan_in,
                              int b_in, double activity);

// Tree cost for arbitrary fan-in: depth (and so delay) of the next power of
// two, FA count of the padded tree scaled by fan_in / padded.
ComponentCost padded_adder_tree_cost(const TechnologyParams& p,
                                     std::uint64_t fan_in, int b_in,
                                     double activity);

ComponentCost accumulator_cost(const TechnologyParams& p, int b_acc,
                               int b_adds_out);

// `n_bits` DFFs; energy is per write event, clock-to-Q delay is neglected.
ComponentCost register_cost(const TechnologyParams& p, std::uint64_t n_bits);

double sram_array_area(const TechnologyParams& p, std::uint64_t n_cells);

}  // namespace imcsim
