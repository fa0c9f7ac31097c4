#pragma once

#include "cogail/demos/dataset.hpp"
#include "cogail/ppo/trainer.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace cogail::service {

struct EvalSettings {
  int codes = 100;
  std::uint64_t seed = 0;
};

// Everything a CLI invocation can be configured with. Unknown keys are
// rejected at every level.
struct RunConfig {
  env::Layout layout;
  demos::DatasetSpec dataset;
  ppo::TrainConfig train;
  ppo::PPOConfig ppo;
  EvalSettings eval;
  std::filesystem::path output_dir = "runs";
  std::vector<std::uint64_t> seeds{300, 400, 500};

  void validate() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::filesystem::path& path);
};

nlohmann::json to_json(const demos::DatasetSpec& spec);
demos::DatasetSpec dataset_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ppo::PPOConfig& cfg);
ppo::PPOConfig ppo_config_from_json(const nlohmann::json& j);

// "17,17,33,33" -> normalized proportions. Throws std::invalid_argument.
std::array<double, 4> parse_distribution(const std::string& text);

}  // namespace cogail::service
