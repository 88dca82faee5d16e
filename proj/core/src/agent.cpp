#include "airmas/agent.hpp"

#include <algorithm>
#include <cmath>

namespace airmas {

const char* action_name(LowLevelAction a) {
  switch (a) {
    case LowLevelAction::TurnLeft: return "turn_left";
    case LowLevelAction::TurnRight: return "turn_right";
    case LowLevelAction::SpeedUp: return "speed_up";
    case LowLevelAction::SlowDown: return "slow_down";
    case LowLevelAction::ClimbUp: return "climb_up";
    case LowLevelAction::ClimbDown: return "climb_down";
    case LowLevelAction::Hold: return "hold";
  }
  return "hold";
}

LowLevelAction action_from_name(const std::string& name) {
  if (name == "turn_left") return LowLevelAction::TurnLeft;
  if (name == "turn_right") return LowLevelAction::TurnRight;
  if (name == "speed_up") return LowLevelAction::SpeedUp;
  if (name == "slow_down") return LowLevelAction::SlowDown;
  if (name == "climb_up") return LowLevelAction::ClimbUp;
  if (name == "climb_down") return LowLevelAction::ClimbDown;
  if (name == "hold") return LowLevelAction::Hold;
  throw ConfigError("unknown low-level action '" + name + "'");
}

FlightCommand low_level_apply(LowLevelAction a, const EntityState& own,
                              const LowLevelQuanta& quanta, const PerformanceLimits& limits) {
  FlightCommand cmd{own.heading, own.z, own.speed};
  switch (a) {
    case LowLevelAction::TurnLeft:
      cmd.desired_heading = wrap_pi(own.heading + quanta.heading_quantum);
      break;
    case LowLevelAction::TurnRight:
      cmd.desired_heading = wrap_pi(own.heading - quanta.heading_quantum);
      break;
    case LowLevelAction::SpeedUp:
      cmd.desired_speed = std::clamp(own.speed + quanta.speed_quantum, limits.v_min, limits.v_max);
      break;
    case LowLevelAction::SlowDown:
      cmd.desired_speed = std::clamp(own.speed - quanta.speed_quantum, limits.v_min, limits.v_max);
      break;
    case LowLevelAction::ClimbUp:
      cmd.desired_altitude = own.z + quanta.altitude_quantum;
      break;
    case LowLevelAction::ClimbDown:
      cmd.desired_altitude = std::max(0.0, own.z - quanta.altitude_quantum);
      break;
    case LowLevelAction::Hold:
      break;
  }
  return cmd;
}

FlightCommand StraightAndLevelAgent::decide(const Perception& p) {
  if (!setpoints_) {
    setpoints_ = FlightCommand{p.own.heading, p.own.z, p.own.speed};
  }
  return *setpoints_;
}

WaypointAgent::WaypointAgent(WaypointAgentConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.waypoints.empty()) throw ConfigError("waypoint agent: empty waypoint list");
  if (!(cfg_.capture_radius > 0.0)) throw ConfigError("waypoint agent: capture_radius must be > 0");
}

FlightCommand WaypointAgent::decide(const Perception& p) {
  const Waypoint* wp = &cfg_.waypoints[index_];
  const double dist = std::hypot(wp->x - p.own.x, wp->y - p.own.y);
  if (dist < cfg_.capture_radius) {
    if (index_ + 1 < cfg_.waypoints.size()) {
      ++index_;
    } else if (cfg_.loop) {
      index_ = 0;
    }
    wp = &cfg_.waypoints[index_];
  }
  FlightCommand cmd;
  cmd.desired_heading = std::atan2(wp->y - p.own.y, wp->x - p.own.x);
  cmd.desired_altitude = wp->z;
  cmd.desired_speed = cfg_.speed;
  return cmd;
}

std::string WaypointAgent::state_label() const {
  return "waypoint[" + std::to_string(index_) + "]";
}

ScriptAgent::ScriptAgent(ScriptAgentConfig cfg, PerformanceLimits limits)
    : quanta_(cfg.quanta), limits_(limits) {
  for (const auto& entry : cfg.script) {
    if (entry.repeat < 1) throw ConfigError("script agent: repeat must be >= 1");
    for (int i = 0; i < entry.repeat; ++i) actions_.push_back(entry.action);
  }
}

FlightCommand ScriptAgent::decide(const Perception& p) {
  const LowLevelAction a = next_ < actions_.size() ? actions_[next_++] : LowLevelAction::Hold;
  label_ = std::string("script:") + action_name(a);
  return low_level_apply(a, p.own, quanta_, limits_);
}

}  // namespace airmas
