#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace cogail::env {

inline constexpr const char* kEnvVersion = "fetchquest-1";
inline constexpr int kObsDim = 10;
inline constexpr int kActDim = 2;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
  double norm() const;
};

double distance(Vec2 a, Vec2 b);

// Axis-aligned rectangle [lo.x, hi.x] x [lo.y, hi.y].
struct Rect {
  Vec2 lo;
  Vec2 hi;
  bool contains(Vec2 p) const { return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y; }
  Vec2 center() const { return {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)}; }
};

struct Circle {
  Vec2 center;
  double radius = 0.0;
  bool contains(Vec2 p) const { return distance(p, center) <= radius; }
};

// Per-agent translation command; components live in [-1, 1].
struct AgentAction {
  double dx = 0.0;
  double dy = 0.0;

  AgentAction clamped() const;
  friend bool operator==(AgentAction a, AgentAction b) = default;
};

enum class Agent : std::uint8_t { kHuman = 0, kRobot = 1 };
enum class Carrier : std::uint8_t { kNone = 0, kHuman = 1, kRobot = 2 };

Carrier carrier_of(Agent a);

// Map geometry. Room i is unlocked while an agent stands on button i; the
// door of a room is its two walls facing the map interior.
struct Layout {
  double map_size = 8.0;
  std::array<Rect, 2> rooms{Rect{{0.0, 6.4}, {1.6, 8.0}}, Rect{{6.4, 0.0}, {8.0, 1.6}}};
  std::array<Circle, 2> buttons{Circle{{2.6, 7.2}, 0.4}, Circle{{5.4, 0.8}, 0.4}};
  std::array<Circle, 2> destinations{Circle{{0.8, 0.8}, 0.5}, Circle{{7.2, 7.2}, 0.5}};
  std::array<Vec2, 2> treasure_spawns{Vec2{0.8, 7.2}, Vec2{7.2, 0.8}};
  Vec2 human_start{3.0, 4.0};
  Vec2 robot_start{5.0, 4.0};
  double start_jitter = 0.3;
  double pickup_radius = 0.3;
  double speed_scale = 0.12;
  int max_steps = 300;

  // Stable digest of all fields, embedded in demo files.
  std::string hash() const;
  nlohmann::json to_json() const;
  static Layout from_json(const nlohmann::json& j);
};

struct EnvState {
  Vec2 human_pos;
  Vec2 robot_pos;
  std::array<Vec2, 2> treasure_pos;
  std::array<bool, 2> door_open{false, false};
  std::array<Carrier, 2> carrier{Carrier::kNone, Carrier::kNone};
  int step = 0;
  bool done = false;
  bool success = false;

  Vec2 position(Agent a) const { return a == Agent::kHuman ? human_pos : robot_pos; }
  // Index of the treasure carried by `a`, if any.
  std::optional<int> carried_by(Agent a) const;
  friend bool operator==(const EnvState&, const EnvState&) = default;
};

using Observation = std::array<double, kObsDim>;

struct StepResult {
  EnvState state;
  bool done = false;
  bool success = false;
};

class EpisodeOver : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Deterministic 2D-Fetch-Quest simulator. step() is a pure function of
// (state, actions); randomness only enters through reset().
class FetchQuest {
 public:
  FetchQuest() = default;
  explicit FetchQuest(Layout layout) : layout_(std::move(layout)) {}

  const Layout& layout() const { return layout_; }

  EnvState reset(std::uint64_t seed) const;
  StepResult step(const EnvState& state, AgentAction human, AgentAction robot) const;
  Observation observe(const EnvState& state) const;

  bool inside_room(int room, Vec2 p) const { return layout_.rooms[room].contains(p); }

 private:
  Vec2 move(const EnvState& s, Vec2 from, AgentAction a) const;

  Layout layout_;
};

}  // namespace cogail::env
