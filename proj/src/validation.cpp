#include "imcsim/validation.hpp"

namespace imcsim {
namespace {

ValidationDesign design(int index, const char* ref, ImcType type, int b_i, int b_w, int b_cycle,
                        std::uint64_t d_i, std::uint64_t d_o, std::uint64_t m,
                        std::uint64_t n_macros, bool pipelined) {
  ImcMacroConfig cfg;
  cfg.imc_type = type;
  cfg.b_i = b_i;
  cfg.b_w = b_w;
  cfg.b_cycle = b_cycle;
  cfg.d_i = d_i;
  cfg.d_o = d_o;
  cfg.m = m;
  cfg.n_macros = n_macros;
  cfg.input_toggle_rate = 0.5;
  cfg.weight_sparsity = 0.5;
  cfg.pipelined = pipelined;
  return {index, ref, cfg};
}

}  // namespace

std::vector<ValidationDesign> validation_designs() {
  using enum ImcType;
  return {
      design(1, "aimc-1", Aimc, 7, 2, 7, 1024, 512, 1, 1, false),
      design(2, "aimc-2", Aimc, 8, 8, 2, 16, 12, 32, 1, true),
      design(3, "aimc-3", Aimc, 8, 8, 1, 64, 256, 1, 8, false),
      design(4, "dimc-1", Dimc, 8, 8, 2, 32, 6, 1, 64, false),
      design(5, "dimc-2", Dimc, 8, 8, 1, 32, 1, 16, 2, true),
      design(6, "dimc-3", Dimc, 8, 8, 2, 128, 8, 8, 8, false),
      design(7, "dimc-4", Dimc, 8, 8, 1, 128, 8, 2, 4, true),
  };
}

}  // namespace imcsim
