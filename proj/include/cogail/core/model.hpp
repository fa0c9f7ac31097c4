#pragma once

#include "cogail/demos/history.hpp"
#include "cogail/env/fetch_quest.hpp"
#include "cogail/nn/adam.hpp"
#include "cogail/nn/archive.hpp"
#include "cogail/nn/gaussian.hpp"
#include "cogail/nn/mlp.hpp"

#include <memory>
#include <optional>
#include <string_view>

namespace cogail::core {

using nn::Matrix;
using nn::Vector;

inline constexpr int kCodeDim = 2;
inline constexpr int kPolicyInput = env::kObsDim + kCodeDim;
inline constexpr int kJointAction = 2 * env::kActDim;
inline constexpr int kDiscInput = env::kObsDim + kJointAction;

enum class TrainMode { kCoGail, kMaInfoGail, kMaGail, kBcSingle, kBcGail };
enum class DiscLoss { kCrossEntropy, kLeastSquares };

std::string_view to_string(TrainMode m);
TrainMode parse_train_mode(std::string_view s);
std::string_view to_string(DiscLoss m);
DiscLoss parse_disc_loss(std::string_view s);

// Whether the policy emits both agents' actions (vs. robot only).
bool is_joint(TrainMode m);

struct NetworkConfig {
  int policy_hidden = 128;
  int policy_layers = 4;
  int recognizer_hidden = 128;
  int disc_hidden = 64;
  double init_log_std = -1.0;
  int history = demos::kDefaultHistory;
};

// Actor-critic with a diagonal Gaussian action head. Input is obs || z.
class ActorCritic {
 public:
  ActorCritic() = default;
  ActorCritic(int input_dim, int action_dim, const NetworkConfig& cfg, nn::Rng& rng);

  struct Step {
    Vector action;  // clamped to [-1, 1]
    Vector raw;     // pre-clamp sample
    double logprob = 0.0;
    double value = 0.0;
  };

  Step act(const Vector& input, bool deterministic, nn::Rng& rng) const;
  Vector mean(const Vector& input) const { return actor.infer(input); }
  double value(const Vector& input) const { return critic.infer(input)(0); }

  int input_dim() const { return actor.input_size(); }
  int action_dim() const { return actor.output_size(); }

  std::vector<nn::Parameter*> parameters();
  std::vector<const nn::Parameter*> parameters() const;

  nn::Mlp actor;
  nn::Mlp critic;
  nn::Parameter log_std;
};

// Joint co-policy step: first two action dims are the human's.
struct CoAction {
  env::AgentAction human;
  env::AgentAction robot;
  Vector raw;
  double logprob = 0.0;
  double value = 0.0;
};

Vector policy_input(const env::Observation& obs, const Eigen::Vector2d& z);
CoAction copolicy_act(const ActorCritic& policy, const env::Observation& obs, const Eigen::Vector2d& z,
                      bool deterministic, nn::Rng& rng);

nn::Mlp make_recognizer(const NetworkConfig& cfg, nn::Rng& rng);
nn::Mlp make_discriminator(int input_dim, const NetworkConfig& cfg, nn::Rng& rng);

// Deterministic tanh-bounded code estimate from a flattened history.
Eigen::Vector2d recognize(const nn::Mlp& recognizer, const Eigen::VectorXd& history);

// All networks and optimizers of one training run.
struct Model {
  TrainMode mode = TrainMode::kCoGail;
  DiscLoss disc_loss = DiscLoss::kCrossEntropy;
  NetworkConfig net;

  ActorCritic policy;
  nn::Mlp recognizer;
  nn::Mlp discriminator;
  std::optional<ActorCritic> human_bc;  // bc_gail: frozen stage-1 human

  nn::Adam policy_opt;  // actor + log_std (PPO, BC)
  nn::Adam critic_opt;
  nn::Adam aux_opt;     // recognizer + actor (lambda1 L_z + lambda2 L_a)
  nn::Adam disc_opt;

  Model() = default;
  Model(TrainMode mode, DiscLoss disc_loss, const NetworkConfig& net, std::uint64_t seed);
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  Model(Model&&) = delete;

  // Robot command for a given observation and code estimate.
  env::AgentAction robot_action(const env::Observation& obs, const Eigen::Vector2d& z) const;
  // Human-side command (joint modes or bc_gail's frozen human).
  env::AgentAction human_action(const env::Observation& obs, const Eigen::Vector2d& z) const;

  void save(nn::Archive& archive) const;
  void load(const nn::Archive& archive);

 private:
  void bind_optimizers();
};

// Rebuilds a Model (architecture from the archive metadata) and loads it.
std::unique_ptr<Model> load_model(const nn::Archive& archive);

}  // namespace cogail::core
