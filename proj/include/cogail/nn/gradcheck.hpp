#pragma once

#include "cogail/nn/mlp.hpp"

#include <functional>
#include <vector>

namespace cogail::nn {

struct GradCheckResult {
  double max_relative_error = 0.0;
  std::size_t coordinates_checked = 0;
  // Worst coordinate, for diagnostics.
  double analytic = 0.0;
  double numeric = 0.0;
};

// Builds the loss on a fresh tape. Must be deterministic.
using LossBuilder = std::function<Var(Tape&)>;

// Compares Tape::backward gradients against central differences on a
// random subset of at least `min_coordinates` parameter entries (all of
// them when fewer exist). Relative error is |a - n| / max(|a|, |n|, floor).
GradCheckResult finite_diff_check(const LossBuilder& loss, const std::vector<Parameter*>& params,
                                  double eps, Rng& rng, std::size_t min_coordinates = 64,
                                  double floor = 1e-6);

}  // namespace cogail::nn
