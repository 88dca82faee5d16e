#pragma once

#include "airmas/units.hpp"

namespace airmas {

// Kinematic truth of one aircraft. Axes: x east, y north, z up.
// Heading is measured counter-clockwise from +x (east) in (-pi, pi].
struct EntityState {
  double x = 0.0;        // m
  double y = 0.0;        // m
  double z = 0.0;        // m, >= 0
  double heading = 0.0;  // rad, CCW from east
  double gamma = 0.0;    // flight-path angle, rad
  double bank = 0.0;     // rad
  double speed = 0.0;    // m/s, > 0
  double time = 0.0;     // s
};

// Unit velocity direction for a state.
inline void velocity_direction(const EntityState& s, double& ux, double& uy, double& uz) {
  const double cg = std::cos(s.gamma);
  ux = cg * std::cos(s.heading);
  uy = cg * std::sin(s.heading);
  uz = std::sin(s.gamma);
}

struct PerformanceLimits {
  double v_min = 50.0;                       // m/s
  double v_max = 400.0;                      // m/s
  double bank_max = deg2rad(60.0);           // rad
  double roll_rate_max = deg2rad(90.0);      // rad/s
  double gamma_max = deg2rad(20.0);          // rad
  double pitch_rate_max = deg2rad(15.0);     // rad/s
  double accel_min = -8.0;                   // m/s^2
  double accel_max = 8.0;                    // m/s^2
  double g = 9.81;                           // m/s^2
};

// Gains of the flight control system that tracks FlightCommand setpoints.
struct FcsGains {
  double k_alt = 0.005;                      // rad commanded per m of altitude error
  double k_v = 1.0;                          // 1/s
  double heading_deadband = deg2rad(0.5);    // rad
};

// High-level setpoints issued by an agent.
struct FlightCommand {
  double desired_heading = 0.0;   // rad, (-pi, pi]
  double desired_altitude = 0.0;  // m
  double desired_speed = 0.0;     // m/s
};

// Actuator-level outputs of the flight control system.
struct ActuatorState {
  double bank = 0.0;    // rad
  double gamma = 0.0;   // rad
  double accel = 0.0;   // m/s^2
};

}  // namespace airmas
