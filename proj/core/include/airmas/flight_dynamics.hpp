#pragma once

#include "airmas/entity_state.hpp"

namespace airmas {

// One control-loop update: move actuators toward the commanded setpoints,
// rate-limited by the airframe limits. Heading error is measured
// right-positive (same convention as bearings), so a positive error banks
// right. Bank returns to level inside the heading deadband.
ActuatorState fcs_step(const EntityState& state, const FlightCommand& cmd,
                       const PerformanceLimits& limits, const FcsGains& gains,
                       double dt);

// Point-mass coordinated-turn kinematics, forward Euler. Positive bank
// turns right (heading-decreasing under the CCW-from-east convention):
// heading_dot = -(g / v) * tan(bank). Speed is clamped into limits.
EntityState dynamics_step(const EntityState& state, const ActuatorState& act,
                          const PerformanceLimits& limits, double dt);

}  // namespace airmas
