#pragma once

#include <string>
#include <vector>

#include "imcsim/macro_model.hpp"

namespace imcsim {

// A published 22/28nm macro used to sanity-check the cost model.
struct ValidationDesign {
  int index;
  std::string ref;
  ImcMacroConfig macro;
};

// The seven reference designs, with 50% input toggle rate and 50% weight
// sparsity; designs with a pipeline stage in the adder tree have
// `pipelined` set.
std::vector<ValidationDesign> validation_designs();

}  // namespace imcsim
