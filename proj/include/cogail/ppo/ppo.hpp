#pragma once

#include "cogail/ppo/buffer.hpp"

#include <random>

namespace cogail::ppo {

struct PPOConfig {
  double lr = 3e-4;  // linearly decayed over training episodes
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double clip = 0.2;
  int epochs = 10;
  int minibatch = 256;
  double value_coef = 0.5;
  double entropy_coef = 0.01;
  // Divide rewards by a running std of the discounted return (ReturnScaler).
  bool scale_rewards = true;

  void validate() const;
};

// lr0 * (1 - completed / total), never negative.
double decayed_lr(double lr0, int completed_episodes, int total_episodes);

// Running standard deviation of the discounted return, accumulated over
// every buffer passed to apply(); rewards are divided by it in place.
class ReturnScaler {
 public:
  explicit ReturnScaler(double gamma) : gamma_(gamma) {}
  void apply(RolloutBuffer& buffer);
  double scale() const;

 private:
  double gamma_;
  double count_ = 0.0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double trace_ = 0.0;
};

// Generalized advantage estimation with resets at episode ends. Raw
// advantages land in buffer.advantages, returns = advantages + values;
// advantages are then normalized to zero mean and unit variance.
void compute_gae(RolloutBuffer& buffer, double gamma, double lambda, bool normalize = true);

struct PPOMetrics {
  double surrogate = 0.0;  // mean clipped objective (to maximize)
  double value_loss = 0.0;
  double entropy = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

// Clipped-surrogate loss pieces for one minibatch (all scalars). Exposed
// for gradient checks; `total` is what the optimizer minimizes.
struct PPOLoss {
  nn::Var total;
  nn::Var surrogate;
  nn::Var value_loss;
  nn::Var entropy;
  nn::Var log_ratio;  // 1 x B
};

PPOLoss ppo_loss(nn::Tape& tape, core::ActorCritic& policy, const Matrix& inputs, const Matrix& raw_actions,
                 const Vector& old_logprob, const Vector& advantages, const Vector& returns, const PPOConfig& cfg);

// Inputs (obs || z) for every stored step.
Matrix policy_inputs(const RolloutBuffer& buffer);

PPOMetrics ppo_update(core::Model& model, RolloutBuffer& buffer, const PPOConfig& cfg, double lr,
                      std::mt19937_64& rng, bool update_actor = true);

}  // namespace cogail::ppo
