#pragma once

#include "cogail/nn/mlp.hpp"

namespace cogail::nn {

inline constexpr double kLogStdMin = -5.0;
inline constexpr double kLogStdMax = 2.0;

// Diagonal Gaussian with a state-independent log standard deviation.
struct GaussianHead {
  Vector mean;
  Vector log_std;
};

double gaussian_logprob(const GaussianHead& head, const Vector& action);
// Zero-mean noise scaled by exp(log_std); deterministic mode returns the mean.
Vector gaussian_sample(const GaussianHead& head, Rng& rng, bool deterministic = false);
double gaussian_entropy(const Vector& log_std);

// Tape versions. mean and action are d x batch, log_std is d x 1.
// Returns 1 x batch log-densities.
Var gaussian_logprob(Var mean, Var log_std, Var action);
// Scalar entropy of the distribution (independent of the mean).
Var gaussian_entropy(Var log_std);

}  // namespace cogail::nn
