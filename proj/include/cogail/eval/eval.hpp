#pragma once

#include "cogail/core/model.hpp"
#include "cogail/demos/dataset.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <filesystem>
#include <memory>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace cogail::eval {

struct LoadedCheckpoint {
  std::unique_ptr<core::Model> model;
  env::Layout layout;
  int episode = 0;
};

// Rejects archives written for another environment version.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& path);
LoadedCheckpoint load_checkpoint(const nn::Archive& archive);

struct Trial {
  std::uint64_t id = 0;  // env seed (interp) or demo id (replay)
  Eigen::Vector2d code = Eigen::Vector2d::Zero();
  bool success = false;
  std::optional<int> strategy;
  int steps = 0;
};

struct EvalReport {
  std::string protocol;  // interp | replay
  int episode = 0;       // checkpoint episode, 0 if unknown
  std::vector<Trial> trials;

  int n_trials() const { return static_cast<int>(trials.size()); }
  int successes() const;
  double success_rate() const;
  // Index 0 is the unknown bucket, 1..4 the strategies. Counts all trials.
  std::array<int, 5> histogram() const;
  // Same, restricted to successful trials.
  std::array<int, 5> success_histogram() const;
  // Share of each strategy among successful trials (zeros if none).
  std::array<double, 4> strategy_proportions() const;

  nlohmann::json summary() const;
  // One tab-separated row per trial after a header line.
  std::string to_table() const;
};

// Deterministic co-policy rollouts under n_codes codes drawn uniformly
// from (-1,1)^2.
EvalReport eval_interpolation(const core::Model& model, const env::Layout& layout, int n_codes, std::uint64_t seed);

// Robot command given the live observation, the recognizer's estimate and
// the step index.
using RobotPolicy = std::function<env::AgentAction(const env::Observation&, const Eigen::Vector2d&, std::size_t)>;

// Open-loop replay of each demo's human actions from its own seed. The
// robot acts through `robot`; recorded robot actions are never read.
EvalReport eval_replay(const core::Model& model, const env::Layout& layout, const demos::DemoDataset& test,
                       const demos::DemoDataset* train = nullptr);
EvalReport eval_replay(const env::Layout& layout, const demos::DemoDataset& test, int history,
                       const std::function<Eigen::Vector2d(const Eigen::VectorXd&)>& recognizer,
                       const std::function<RobotPolicy(const demos::Demonstration&)>& robot_for);

struct LatentRow {
  std::uint64_t demo_id = 0;
  std::optional<int> strategy;
  Eigen::Vector2d mean_code = Eigen::Vector2d::Zero();
};

std::vector<LatentRow> export_latent(const core::Model& model, const demos::DemoDataset& dataset);
std::string latent_table(const std::vector<LatentRow>& rows);

struct ClusterStats {
  double within = 0.0;   // mean distance of a row to its strategy centroid
  double between = 0.0;  // mean pairwise distance between centroids
  double ratio() const { return between > 0.0 ? within / between : std::numeric_limits<double>::infinity(); }
};

// Rows without a label are ignored; needs at least two labelled groups.
ClusterStats cluster_stats(const std::vector<LatentRow>& rows);

struct SeedStats {
  int episode = 0;
  double mean = 0.0;
  double std = 0.0;  // population
};

struct SeedSummary {
  std::vector<SeedStats> per_checkpoint;
  std::size_t best = 0;  // index maximizing the mean
  const SeedStats& best_stats() const { return per_checkpoint.at(best); }
  nlohmann::json to_json() const;
};

// reports[s][c]: seed s, checkpoint c. All seeds must share the schedule.
SeedSummary aggregate_seeds(const std::vector<std::vector<EvalReport>>& reports);
SeedSummary aggregate_values(const std::vector<std::vector<double>>& values, const std::vector<int>& episodes);

}  // namespace cogail::eval
