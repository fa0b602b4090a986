#include "imcsim/technology.hpp"

#include <cmath>
#include <string>

#include "imcsim/errors.hpp"

namespace imcsim {
namespace {

void positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string("technology.") + name + " must be a positive finite number");
  }
}

}  // namespace

void TechnologyParams::validate() const {
  positive(v_dd, "v_dd");
  positive(c_gate, "c_gate");
  positive(d_gate, "d_gate");
  positive(a_gate, "a_gate");
  positive(k1, "k1");
  positive(k2, "k2");
  positive(k3, "k3");
  positive(k4, "k4");
  positive(k5, "k5");
  positive(k6, "k6");
  positive(k7, "k7");
  positive(fa_energy_ratio, "fa_energy_ratio");
  positive(dff_energy_ratio, "dff_energy_ratio");
  positive(fa_sum_delay_ratio, "fa_sum_delay_ratio");
  positive(fa_carry_delay_ratio, "fa_carry_delay_ratio");
  positive(fa_area_ratio, "fa_area_ratio");
  positive(dff_area_ratio, "dff_area_ratio");
  positive(sram_cell_area, "sram_cell_area");
  positive(sram_cell_write_energy, "sram_cell_write_energy");
  if (!(adc_fs > 0.0 && adc_fs <= 1.0)) {
    throw ConfigError("technology.adc_fs must be in (0, 1]");
  }
  if (!(adc_k >= 1.0) || !std::isfinite(adc_k)) {
    throw ConfigError("technology.adc_k must be >= 1");
  }
}

}  // namespace imcsim
