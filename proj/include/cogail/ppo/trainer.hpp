#pragma once

#include "cogail/core/losses.hpp"
#include "cogail/demos/dataset.hpp"
#include "cogail/ppo/ppo.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>

namespace cogail::ppo {

struct TrainConfig {
  core::TrainMode mode = core::TrainMode::kCoGail;
  int episodes = 200;
  int steps_per_episode = 6000;
  double lambda1 = 1.0;
  double lambda2 = 0.5;
  int history = demos::kDefaultHistory;
  std::uint64_t seed = 300;
  core::DiscLoss disc_loss = core::DiscLoss::kCrossEntropy;
  int checkpoint_interval = 10;
  int inner_updates = 10;
  int inner_batch = 256;
  double code_noise = 0.2;
  // Per-step penalty -info_reward * ||psi(h) - z|| added to the PPO reward
  // in modes that train on L_z.
  double info_reward = 0.5;
  // Episode ends caused by success are absorbing (no bootstrap).
  bool terminal_on_success = false;
  // Regression epochs on the demos before the first adversarial iteration.
  // cogail gives every demo its trajectory code (see trajectory_codes) and
  // fits the recognizer to it as well; other modes see uniform random codes.
  int warmstart_epochs = 150;
  // Initial learning rate of the discriminator and recognizer updates,
  // decayed on the same schedule as PPO's.
  double aux_lr = 3e-4;
  // Adversarial iterations where PPO only fits the critic.
  int critic_warmup_episodes = 5;
  // bc_single epochs are `episodes`; bc_gail runs bc_epochs of human BC first.
  int bc_epochs = 200;
  double bc_lr = 1e-3;
  int bc_batch = 256;
  core::NetworkConfig net;

  void validate() const;
  nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& j);

  core::AuxWeights aux_weights() const;
};

struct MetricsRow {
  int episode = 0;
  double disc_loss = 0.0;
  double code_loss = 0.0;
  double behavior_loss = 0.0;
  double ppo_surrogate = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double approx_kl = 0.0;
  double mean_reward = 0.0;
  double bc_loss = 0.0;
  double success_rate = 0.0;
  int rollouts = 0;
  double lr = 0.0;
  double wall_time = 0.0;

  // wall_time is omitted when `with_time` is false.
  nlohmann::json to_json(bool with_time = true) const;
};

// Fills `buffer` to capacity with rollouts of the current policy. Rewards
// are left at zero; see relabel_rewards.
void collect_rollouts(const env::FetchQuest& env, const core::Model& model, core::CodeSampler& sampler,
                      RolloutBuffer& buffer, std::mt19937_64& rng, bool terminal_on_success = false);

// Discriminator reward plus the optional code-recovery penalty.
void relabel_rewards(const core::Model& model, RolloutBuffer& buffer, double info_reward);

// Discriminator inputs for every stored step (joint or robot-side).
Matrix buffer_disc_inputs(const core::Model& model, const RolloutBuffer& buffer);

// Mean-squared error between a policy head's mean action and targets.
nn::Var bc_loss(nn::Tape& tape, core::ActorCritic& policy, const Matrix& inputs, const Matrix& targets);

// Full training run. One object per run; run_episode() advances one
// outer iteration (a BC epoch for bc_single).
class Trainer {
 public:
  Trainer(TrainConfig cfg, PPOConfig ppo, std::shared_ptr<const demos::DemoDataset> demos);

  MetricsRow run_episode();
  int episode() const { return episode_; }
  bool finished() const { return episode_ >= cfg_.episodes; }
  bool checkpoint_due() const;

  core::Model& model() { return *model_; }
  const core::Model& model() const { return *model_; }
  const TrainConfig& config() const { return cfg_; }
  const env::FetchQuest& env() const { return env_; }

  nn::Archive checkpoint() const;

 private:
  void pretrain_human();
  double warm_start();
  MetricsRow bc_epoch();
  MetricsRow gail_episode();

  TrainConfig cfg_;
  PPOConfig ppo_;
  std::shared_ptr<const demos::DemoDataset> demos_;
  env::FetchQuest env_;
  std::unique_ptr<core::Model> model_;
  std::optional<demos::DemoSampler> sampler_;
  core::CodeSampler codes_;
  ReturnScaler scaler_;
  RolloutBuffer buffer_;
  std::mt19937_64 rng_;
  int episode_ = 0;
  double wall_ = 0.0;
};

struct TrainResult {
  std::vector<std::filesystem::path> checkpoints;
  std::vector<MetricsRow> metrics;
};

std::string checkpoint_name(int episode);

// One code per demo from the two leading principal components of the agent
// paths, rank-mapped onto (-1, 1) per dimension so they fill the code
// square. Used to warm-start code-conditioned modes.
std::vector<Eigen::Vector2d> trajectory_codes(const demos::DemoDataset& dataset);

// Runs to completion, writing ckpt_XXXXXX.bin every checkpoint interval
// plus a final one, and appending metrics.jsonl rows to `out_dir`.
TrainResult train(const TrainConfig& cfg, const PPOConfig& ppo, std::shared_ptr<const demos::DemoDataset> demos,
                  const std::filesystem::path& out_dir,
                  const std::function<void(const MetricsRow&)>& progress = {});

// Dense-reward reach task: the robot must reach a goal encoded by z
// (goal = center + goal_scale * z) with reward -distance per step; the
// human stands still.
struct ReachConfig {
  int updates = 50;
  int steps_per_update = 2000;
  int episode_length = 100;
  double goal_scale = 2.4;
  std::uint64_t seed = 1;
};

struct ReachResult {
  std::vector<double> mean_returns;  // one per update, before the update
  double final_return = 0.0;          // evaluated after the last update
  double random_return = 0.0;         // uniform random actions
};

ReachResult train_reach_goal(const ReachConfig& cfg, const PPOConfig& ppo);

}  // namespace cogail::ppo
