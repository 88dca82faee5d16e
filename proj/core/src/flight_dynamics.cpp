#include "airmas/flight_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace airmas {

namespace {

bool finite_state(const EntityState& s) {
  return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z) &&
         std::isfinite(s.heading) && std::isfinite(s.gamma) &&
         std::isfinite(s.bank) && std::isfinite(s.speed);
}

}  // namespace

ActuatorState fcs_step(const EntityState& state, const FlightCommand& cmd,
                       const PerformanceLimits& limits, const FcsGains& gains,
                       double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("fcs_step: dt must be > 0");

  ActuatorState act;

  // Right-positive heading error: positive when the commanded heading lies
  // clockwise (to the right) of the current one.
  const double heading_error = wrap_pi(state.heading - cmd.desired_heading);
  double bank_target = 0.0;
  if (std::abs(heading_error) >= gains.heading_deadband) {
    bank_target = std::copysign(limits.bank_max, heading_error);
  }
  const double max_roll = limits.roll_rate_max * dt;
  act.bank = state.bank + std::clamp(bank_target - state.bank, -max_roll, max_roll);

  const double altitude_error = cmd.desired_altitude - state.z;
  const double gamma_target =
      std::clamp(gains.k_alt * altitude_error, -limits.gamma_max, limits.gamma_max);
  const double max_pitch = limits.pitch_rate_max * dt;
  act.gamma = state.gamma + std::clamp(gamma_target - state.gamma, -max_pitch, max_pitch);

  act.accel = std::clamp(gains.k_v * (cmd.desired_speed - state.speed),
                         limits.accel_min, limits.accel_max);
  return act;
}

EntityState dynamics_step(const EntityState& state, const ActuatorState& act,
                          const PerformanceLimits& limits, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dynamics_step: dt must be > 0");
  if (!finite_state(state) || !std::isfinite(act.bank) ||
      !std::isfinite(act.gamma) || !std::isfinite(act.accel)) {
    throw std::invalid_argument("dynamics_step: non-finite input");
  }

  const double bank = std::clamp(act.bank, -limits.bank_max, limits.bank_max);
  const double gamma = std::clamp(act.gamma, -limits.gamma_max, limits.gamma_max);
  const double accel = std::clamp(act.accel, limits.accel_min, limits.accel_max);

  const double v = state.speed;
  const double heading_rate = -(limits.g / v) * std::tan(bank);

  EntityState next = state;
  next.x = state.x + v * std::cos(gamma) * std::cos(state.heading) * dt;
  next.y = state.y + v * std::cos(gamma) * std::sin(state.heading) * dt;
  next.z = std::max(0.0, state.z + v * std::sin(gamma) * dt);
  next.heading = wrap_pi(state.heading + heading_rate * dt);
  next.speed = std::clamp(v + accel * dt, limits.v_min, limits.v_max);
  next.gamma = gamma;
  next.bank = bank;
  next.time = state.time + dt;
  return next;
}

}  // namespace airmas
