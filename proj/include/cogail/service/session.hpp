#pragma once

#include "cogail/core/model.hpp"
#include "cogail/demos/dataset.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cogail::service {

inline constexpr int kTickHz = 20;
inline constexpr int kDefaultRounds = 20;

enum class SessionMode { kCollectTwoHuman, kPlayVsPolicy };

std::string_view to_string(SessionMode m);
std::optional<SessionMode> parse_session_mode(std::string_view s);

// A message addressed to one client, or to everyone when `to` is empty.
struct Outgoing {
  std::optional<std::string> to;
  nlohmann::json message;
};

struct RoundOutcome {
  int round = 0;
  bool success = false;
  bool aborted = false;
};

// Transport-independent game session. The owner feeds inbound messages
// through handle() and drives the simulation with tick() at kTickHz.
class Session {
 public:
  // `policy` may be null (collect mode only). It must outlive the session.
  Session(std::string id, env::Layout layout, const core::Model* policy, int rounds = kDefaultRounds,
          std::uint64_t seed = 0);

  std::vector<Outgoing> connect(const std::string& client);
  std::vector<Outgoing> disconnect(const std::string& client);
  std::vector<Outgoing> handle(const std::string& client, const std::string& raw);
  std::vector<Outgoing> handle(const std::string& client, const nlohmann::json& msg);
  std::vector<Outgoing> tick();

  const std::string& id() const { return id_; }
  std::optional<SessionMode> mode() const { return mode_; }
  bool running() const { return running_; }
  int round() const { return round_; }
  int rounds() const { return rounds_; }
  long ticks() const { return tick_; }
  const env::EnvState& state() const { return state_; }
  const std::vector<RoundOutcome>& outcomes() const { return outcomes_; }
  int successes() const;

  // Finished episodes, successful or not.
  const demos::DemoDataset& recordings() const { return recordings_; }
  nlohmann::json report() const;

 private:
  std::vector<Outgoing> start(const std::string& client);
  std::vector<Outgoing> begin_round();
  std::vector<Outgoing> finish_round(bool aborted);
  Outgoing error(const std::string& client, const std::string& code, const std::string& detail) const;
  Outgoing state_message(const Eigen::Vector2d& zhat) const;
  std::optional<std::string> role_of(const std::string& client) const;

  std::string id_;
  env::FetchQuest env_;
  const core::Model* policy_;
  int rounds_;
  std::mt19937_64 rng_;

  std::optional<SessionMode> mode_;
  std::map<std::string, std::string> roles_;  // client -> role
  std::map<std::string, long> last_seq_;      // role -> last accepted seq
  std::map<std::string, env::AgentAction> held_;

  bool running_ = false;
  int round_ = 0;
  long tick_ = 0;
  env::EnvState state_;
  std::uint64_t episode_seed_ = 0;
  std::vector<env::Observation> obs_;
  std::vector<env::AgentAction> human_;
  demos::Demonstration current_;
  Eigen::Vector2d zhat_ = Eigen::Vector2d::Zero();

  std::vector<RoundOutcome> outcomes_;
  demos::DemoDataset recordings_;
};

}  // namespace cogail::service
