#pragma once

#include "cogail/nn/tape.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cogail::nn {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  // Global-norm clip applied before the update; <= 0 disables.
  double max_grad_norm = 0.5;
};

struct AdamState {
  std::vector<Matrix> first_moment;
  std::vector<Matrix> second_moment;
  std::int64_t step = 0;
};

struct StepReport {
  bool applied = false;
  double grad_norm = 0.0;
  std::string diagnostics;
};

class Adam {
 public:
  Adam() = default;
  Adam(std::vector<Parameter*> params, AdamConfig config = {});

  // Consumes Parameter::grad of every parameter, then zeroes it. A
  // non-finite gradient aborts the update and leaves parameters and
  // moments untouched.
  StepReport step(double lr);
  void zero_grad();

  // Box constraint re-applied after every step.
  void set_bounds(const Parameter* p, double lo, double hi);

  const std::vector<Parameter*>& parameters() const { return params_; }
  AdamState& state() { return state_; }
  const AdamState& state() const { return state_; }
  const AdamConfig& config() const { return config_; }

 private:
  struct Bound {
    std::size_t index;
    double lo, hi;
  };
  std::vector<Parameter*> params_;
  AdamConfig config_;
  AdamState state_;
  std::vector<Bound> bounds_;
};

double global_grad_norm(const std::vector<Parameter*>& params);

}  // namespace cogail::nn
