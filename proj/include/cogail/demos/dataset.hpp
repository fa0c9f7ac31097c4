#pragma once

#include "cogail/env/fetch_quest.hpp"
#include "cogail/env/scripted_expert.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cogail::demos {

inline constexpr int kFormatVersion = 1;
inline constexpr int kDefaultHistory = 4;

struct DemoStep {
  env::Observation obs{};
  env::AgentAction human;
  env::AgentAction robot;
  friend bool operator==(const DemoStep&, const DemoStep&) = default;
};

struct DemoMeta {
  std::string env_version = env::kEnvVersion;
  // Environment reset seed; also the demo's identity within a project.
  std::uint64_t seed = 0;
  std::string source = "scripted";  // scripted | ui
  std::optional<int> strategy;
  bool success = false;
  friend bool operator==(const DemoMeta&, const DemoMeta&) = default;
};

struct Demonstration {
  DemoMeta meta;
  std::vector<DemoStep> steps;
  env::Observation final_obs{};

  std::size_t size() const { return steps.size(); }
  // Observations s_0..s_T (T = size()).
  std::vector<env::Observation> observations() const;
  friend bool operator==(const Demonstration&, const Demonstration&) = default;
};

struct DemoDataset {
  env::Layout layout;
  std::vector<Demonstration> demos;

  std::size_t total_steps() const;
  // Count per strategy label 1..4; index 0 counts unlabeled demos.
  std::array<int, 5> strategy_counts() const;
};

struct DatasetSpec {
  int count = 60;
  std::array<double, 4> proportions{0.25, 0.25, 0.25, 0.25};
  std::uint64_t seed = 0;
  double noise_sigma = 0.05;
  int max_consecutive_failures = 50;
};

// Largest-remainder apportionment of spec.count over spec.proportions.
std::array<int, 4> strategy_counts(const DatasetSpec& spec);

// Runs the scripted expert for each strategy until the requested number of
// successful demonstrations exists. Throws if the expert fails more than
// spec.max_consecutive_failures times in a row.
DemoDataset generate_dataset(const DatasetSpec& spec, const env::Layout& layout = {});

// Records one scripted episode from reset(seed).
Demonstration record_scripted(const env::FetchQuest& env, const env::ExpertPlan& plan, std::uint64_t seed,
                              std::uint64_t noise_seed);

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize(const DemoDataset& dataset);
DemoDataset deserialize(const std::string& bytes);
void save(const DemoDataset& dataset, const std::filesystem::path& path);
DemoDataset load(const std::filesystem::path& path);

// Stratified by strategy label; `fraction` of each stratum goes to train.
std::pair<DemoDataset, DemoDataset> split(const DemoDataset& dataset, double fraction, std::uint64_t seed);

// Max per-component deviation between recorded and re-simulated
// observations, or +inf if the replay diverges structurally.
double replay_error(const env::FetchQuest& env, const Demonstration& demo);

}  // namespace cogail::demos
