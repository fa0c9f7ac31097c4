#pragma once

#include "cogail/core/model.hpp"

namespace cogail::ppo {

using core::Matrix;
using core::Vector;

// On-policy experience, one column per environment step. Episodes are
// stored contiguously; `episode_end(t)` marks the last step of each.
struct RolloutBuffer {
  RolloutBuffer() = default;
  RolloutBuffer(std::size_t capacity, int action_dim, int history_dim);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return size_; }
  bool full() const { return size_ == capacity_; }
  void clear();

  // Appends one step and returns its column index.
  std::size_t push();

  Matrix obs;      // 10 x N
  Matrix codes;    // 2 x N
  Matrix history;  // H x N
  Matrix raw;      // action_dim x N, pre-clamp samples
  Matrix human;    // 2 x N, executed
  Matrix robot;    // 2 x N, executed
  Vector logprob;
  Vector value;
  Vector reward;
  Vector bootstrap;  // V(s_{t+1}) used when an episode is cut without a terminal state
  std::vector<std::uint8_t> episode_end;
  std::vector<std::uint8_t> terminal;  // true end: no bootstrap

  // Per-episode bookkeeping.
  std::vector<std::size_t> episode_lengths;
  int episodes_finished = 0;
  int episodes_succeeded = 0;

  Vector advantages;
  Vector returns;

 private:
  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
};

}  // namespace cogail::ppo
