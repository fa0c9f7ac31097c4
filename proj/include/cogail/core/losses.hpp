#pragma once

#include "cogail/core/model.hpp"

#include <random>

namespace cogail::core {

// Stacks (obs, human, robot) columns into discriminator inputs.
Matrix disc_input(const Matrix& obs, const Matrix& human, const Matrix& robot);
// Mode-aware: robot-only policies are discriminated on (obs, robot).
Matrix disc_input(const Model& model, const Matrix& obs, const Matrix& human, const Matrix& robot);

// Raw (pre-squash) discriminator scores, 1 x B.
nn::Var disc_scores(nn::Tape& tape, nn::Mlp& disc, const Matrix& inputs);

// cross_entropy: E[softplus(-D_raw(x))] + E[softplus(D_raw(y))], the
//   negated log-likelihood objective with D = sigmoid(raw);
// least_squares: E[(tanh(D_raw(x)) - 1)^2] + E[(tanh(D_raw(y)) + 1)^2].
// x are expert inputs, y policy inputs.
nn::Var disc_loss(nn::Tape& tape, nn::Mlp& disc, DiscLoss mode, const Matrix& expert, const Matrix& policy);

// Discriminator-derived reward; increasing in the raw score.
double gail_reward(DiscLoss mode, double raw_score);
Vector gail_rewards(const nn::Mlp& disc, DiscLoss mode, const Matrix& inputs);

// Strategy reconstruction: mean_i || psi(h_i) - z_i ||. h is data.
nn::Var loss_code(nn::Tape& tape, nn::Mlp& recognizer, const Matrix& history, const Matrix& codes);

// Behavior reconstruction: mean_i || mu_H(s_i, psi(h_i)) - a^H_i ||, with
// gradients into both the recognizer and the actor.
nn::Var loss_behavior(nn::Tape& tape, nn::Mlp& recognizer, ActorCritic& policy, const Matrix& history,
                      const Matrix& obs, const Matrix& human);

// 5x5 grid over (-1,1)^2 visited in a fixed cycle, plus uniform jitter.
class CodeSampler {
 public:
  static constexpr int kGrid = 5;
  static constexpr double kSpacing = 0.4;

  explicit CodeSampler(double noise = 0.2) : noise_(noise) {}

  Eigen::Vector2d sample(std::mt19937_64& rng);
  static Eigen::Vector2d center(int index);
  int cycle_position() const { return counter_ % (kGrid * kGrid); }
  double noise() const { return noise_; }

 private:
  double noise_;
  long counter_ = 0;
};

struct DemoBatchView {
  const Matrix& history;
  const Matrix& obs;
  const Matrix& human;
  const Matrix& robot;
};

struct BufferBatchView {
  const Matrix& history;
  const Matrix& codes;
  const Matrix& disc_inputs;
};

struct LossReport {
  double disc_loss = 0.0;
  double code_loss = 0.0;      // L_z
  double behavior_loss = 0.0;  // L_a
};

struct AuxWeights {
  double code = 1.0;      // lambda1
  double behavior = 0.5;  // lambda2
};

// One recognizer/actor step on lambda1 L_z + lambda2 L_a followed by one
// discriminator step. Terms with zero weight are neither evaluated nor
// stepped.
LossReport combined_update(Model& model, const DemoBatchView& demo, const BufferBatchView& buffer,
                           AuxWeights weights, double aux_lr, double disc_lr);

}  // namespace cogail::core
