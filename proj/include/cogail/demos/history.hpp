#pragma once

#include "cogail/demos/dataset.hpp"

#include <Eigen/Dense>

namespace cogail::demos {

// (s_{t-K..t}, a^H_{t-1}). Indices before 0 repeat s_0; a^H_{-1} is zero.
struct HistoryWindow {
  std::vector<env::Observation> states;
  env::AgentAction prev_human;

  static int flat_size(int K) { return (K + 1) * env::kObsDim + env::kActDim; }
  Eigen::VectorXd flatten() const;
};

// `obs` must hold s_0..s_t; `human` must hold a^H_0..a^H_{t-1}.
HistoryWindow history_window(std::span<const env::Observation> obs, std::span<const env::AgentAction> human,
                             std::size_t t, int K);
HistoryWindow history_window(const Demonstration& demo, std::size_t t, int K);

// Writes the flattened window straight into `out` (length flat_size(K)).
void write_history(std::span<const env::Observation> obs, std::span<const env::AgentAction> human,
                   std::size_t t, int K, double* out);

// Column-major batch: one sample per column.
struct DemoBatch {
  Eigen::MatrixXd history;  // flat_size(K) x B
  Eigen::MatrixXd obs;      // 10 x B
  Eigen::MatrixXd human;    // 2 x B
  Eigen::MatrixXd robot;    // 2 x B
  std::vector<std::pair<std::size_t, std::size_t>> index;  // (demo, t)
};

// Uniform over all (demo, t) pairs.
class DemoSampler {
 public:
  DemoSampler(const DemoDataset& dataset, int K);
  DemoBatch sample(std::size_t batch_size, std::mt19937_64& rng) const;
  std::size_t total_steps() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

 private:
  const DemoDataset* dataset_;
  int K_;
  std::vector<std::vector<env::Observation>> obs_;
  std::vector<std::vector<env::AgentAction>> human_;
  std::vector<std::size_t> cumulative_;
};

}  // namespace cogail::demos
