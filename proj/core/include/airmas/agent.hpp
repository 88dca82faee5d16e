#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "airmas/entity_state.hpp"
#include "airmas/errors.hpp"
#include "airmas/geometry.hpp"

namespace airmas {

// Immutable snapshot handed to an agent each decision tick. Contacts never
// include the agent's own entity; geometry is present iff the designated
// target is among the contacts.
struct Perception {
  EntityState own;
  std::vector<std::pair<std::string, EntityState>> contacts;
  std::optional<std::string> target_id;
  std::optional<RelativeGeometry> geometry;
  double time = 0.0;

  // Designated target's state, or nullptr when absent.
  const EntityState* target() const {
    if (!target_id) return nullptr;
    for (const auto& [id, state] : contacts) {
      if (id == *target_id) return &state;
    }
    return nullptr;
  }
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual FlightCommand decide(const Perception& p) = 0;
  // Short label for trace records: FSM state name, active behaviour-tree
  // node path, waypoint index, etc.
  virtual std::string state_label() const = 0;
};

enum class LowLevelAction { TurnLeft, TurnRight, SpeedUp, SlowDown, ClimbUp, ClimbDown, Hold };

const char* action_name(LowLevelAction a);
LowLevelAction action_from_name(const std::string& name);

struct LowLevelQuanta {
  double heading_quantum = deg2rad(10.0);  // rad
  double speed_quantum = 10.0;             // m/s
  double altitude_quantum = 100.0;         // m
};

// Map a discrete action to setpoints relative to the current state.
// TurnLeft increases heading (CCW-positive); speed is clamped into limits.
FlightCommand low_level_apply(LowLevelAction a, const EntityState& own,
                              const LowLevelQuanta& quanta, const PerformanceLimits& limits);

// Holds whatever heading/altitude/speed it first sees.
class StraightAndLevelAgent : public Agent {
 public:
  FlightCommand decide(const Perception& p) override;
  std::string state_label() const override { return "straight_and_level"; }

 private:
  std::optional<FlightCommand> setpoints_;
};

struct Waypoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct WaypointAgentConfig {
  std::vector<Waypoint> waypoints;
  double capture_radius = 500.0;  // m, horizontal
  double speed = 200.0;           // m/s
  bool loop = false;
};

class WaypointAgent : public Agent {
 public:
  explicit WaypointAgent(WaypointAgentConfig cfg);
  FlightCommand decide(const Perception& p) override;
  std::string state_label() const override;
  size_t current_index() const { return index_; }

 private:
  WaypointAgentConfig cfg_;
  size_t index_ = 0;
};

struct ScriptEntry {
  LowLevelAction action = LowLevelAction::Hold;
  int repeat = 1;  // decision ticks this entry stays active
};

struct ScriptAgentConfig {
  std::vector<ScriptEntry> script;
  LowLevelQuanta quanta;
};

// Plays a fixed sequence of low-level actions, one per decision tick,
// then holds.
class ScriptAgent : public Agent {
 public:
  ScriptAgent(ScriptAgentConfig cfg, PerformanceLimits limits);
  FlightCommand decide(const Perception& p) override;
  std::string state_label() const override { return label_; }

 private:
  std::vector<LowLevelAction> actions_;  // expanded by repeat
  LowLevelQuanta quanta_;
  PerformanceLimits limits_;
  size_t next_ = 0;
  std::string label_ = "script";
};

}  // namespace airmas
