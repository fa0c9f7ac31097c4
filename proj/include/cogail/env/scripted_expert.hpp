#pragma once

#include "cogail/env/fetch_quest.hpp"

#include <random>
#include <span>
#include <utility>
#include <vector>

namespace cogail::env {

// Strategy 1: human unlocks for the robot first; 2: human fetches first;
// 3 and 4 repeat 1 and 2 with the room-to-agent assignment swapped.
struct ExpertPlan {
  int strategy = 1;
  double noise_sigma = 0.05;

  Agent first_fetcher() const;
  // Room whose treasure ends up with `a`.
  int room_of(Agent a) const;
};

// Waypoint controller for one plan. Stateless: the active phase is read
// off the environment state, so it can take over mid-episode.
std::pair<AgentAction, AgentAction> scripted_expert(const ExpertPlan& plan, const EnvState& state,
                                                    const Layout& layout, std::mt19937_64& rng);

// Point just outside the door corner of `room` where a fetcher waits.
Vec2 door_approach(const Layout& layout, int room);

// 1..4, or nullopt when no treasure was picked up.
std::optional<int> classify_strategy(std::span<const Observation> trajectory);

// 180-degree rotation about the map center combined with swapping the two
// agents (and therefore rooms, buttons and treasures). Maps strategy
// 1 <-> 2 and 3 <-> 4.
EnvState mirror_swap(const EnvState& s, const Layout& layout);
int mirror_swap_strategy(int strategy);

}  // namespace cogail::env
