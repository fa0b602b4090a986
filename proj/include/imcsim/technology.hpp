#pragma once

namespace imcsim {

// Calibrated technology constants for the 28nm / 0.9V cost model, in SI base
// units (F, s, V, J) except areas, which are in um^2.
struct TechnologyParams {
  double v_dd = 0.9;
  double c_gate = 0.7e-15;   // NAND2 input capacitance
  double d_gate = 47.8e-12;  // NAND2 delay
  double a_gate = 0.614;     // NAND2 area

  // ADC energy: (k1*res + k2*4^res) * Vdd^2
  double k1 = 100e-15;
  double k2 = 1e-18;
  // ADC delay: (k3*D_i + k4) * res
  double k3 = 6.53e-12;
  double k4 = 640e-12;
  // ADC area: 10^(-k5*res + k6) * 2^res
  double k5 = 0.0369;
  double k6 = 1.206;
  // DAC energy: k7 * res * Vdd^2
  double k7 = 50e-15;

  // Full adder and DFF costs as multiples of the NAND2 figures.
  double fa_energy_ratio = 6.0;
  double dff_energy_ratio = 3.0;
  double fa_sum_delay_ratio = 4.8;
  double fa_carry_delay_ratio = 2.0;
  double fa_area_ratio = 7.8;
  double dff_area_ratio = 6.0;

  // Placeholder calibration inputs; fit against a memory compiler before
  // trusting absolute areas / weight-load energies.
  double sram_cell_area = 0.3;            // um^2 per 6T cell
  double sram_cell_write_energy = 50e-15;  // J per bit written

  double adc_fs = 0.5;  // normalized full-scale fraction
  double adc_k = 2.0;   // noise margin constant

  [[nodiscard]] double gate_energy() const { return c_gate * v_dd * v_dd; }
  [[nodiscard]] double fa_energy() const { return fa_energy_ratio * gate_energy(); }
  [[nodiscard]] double dff_energy() const { return dff_energy_ratio * gate_energy(); }
  [[nodiscard]] double fa_sum_delay() const { return fa_sum_delay_ratio * d_gate; }
  [[nodiscard]] double fa_carry_delay() const { return fa_carry_delay_ratio * d_gate; }
  [[nodiscard]] double fa_area() const { return fa_area_ratio * a_gate; }
  [[nodiscard]] double dff_area() const { return dff_area_ratio * a_gate; }

  // Throws ConfigError naming the first offending field.
  void validate() const;
};

}  // namespace imcsim
