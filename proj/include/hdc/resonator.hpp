#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdc/item_memory.hpp"

namespace hdc {

struct ResonatorProblem {
  Hypervector input;                          // the product to factor
  std::vector<const ItemMemory*> codebooks;   // one per factor, F >= 2
  int max_iters = 200;
  bool record_trajectory = false;
};

struct ResonatorResult {
  std::vector<std::string> factors;  // best entry per codebook
  bool converged = false;            // exact rebinding check passed
  int iterations = 0;
  // per iteration, per factor prediction snapshots (when recorded)
  std::optional<std::vector<std::vector<Hypervector>>> trajectory;
};

// Recurrent factorization of a bind product. Predictions start from the
// normalized superposition of each codebook and are updated synchronously:
//   x_f <- sign(project_f(input * prod_{g != f} x_g))
// with sign ties resolved by each codebook's tie-break vector. Stops at an
// exact fixed point or after max_iters. converged is set only when binding
// the retrieved entries reproduces the input in every component.
ResonatorResult factorize(const ResonatorProblem& problem);

}  // namespace hdc
