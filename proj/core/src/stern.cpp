#include "airmas/stern.hpp"

#include <cmath>

namespace airmas {

namespace {

const EntityState& require_target(const Perception& p) {
  const EntityState* t = p.target();
  if (t == nullptr || !p.geometry) {
    throw MissingTargetError("stern conversion requires a target contact");
  }
  return *t;
}

double los_azimuth(const EntityState& own, double to_x, double to_y) {
  return std::atan2(to_y - own.y, to_x - own.x);
}

}  // namespace

void validate(const SternConversionParams& p) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string("stern params: ") + name + " must be > 0");
  };
  positive(p.r_conversion, "r_conversion");
  positive(p.d_offset, "d_offset");
  positive(p.r_turn_in, "r_turn_in");
  positive(p.r_station, "r_station");
  positive(p.v_match_tol, "v_match_tol");
  positive(p.capture_aa, "capture_aa");
  positive(p.capture_ata, "capture_ata");
  if (!(p.r_turn_in < p.r_conversion)) {
    throw ConfigError("stern params: r_turn_in must be < r_conversion");
  }
}

const char* stern_phase_name(SternPhase s) {
  switch (s) {
    case SternPhase::PurePursuit: return "PurePursuit";
    case SternPhase::FlyRelativeBearing: return "FlyRelativeBearing";
    case SternPhase::FlyingOffset: return "FlyingOffset";
    case SternPhase::Converting: return "Converting";
    case SternPhase::Matching: return "Matching";
  }
  return "PurePursuit";
}

double lateral_displacement(const EntityState& own, const EntityState& target) {
  const double tx = std::cos(target.heading);
  const double ty = std::sin(target.heading);
  const double dx = own.x - target.x;
  const double dy = own.y - target.y;
  return std::abs(tx * dy - ty * dx);
}

SternPhase stern_transition(SternPhase s, const Perception& p, const SternConversionParams& prm) {
  const EntityState& target = require_target(p);
  const RelativeGeometry& g = *p.geometry;
  const double aa = std::abs(g.aa);
  const double ata = std::abs(g.ata);

  switch (s) {
    case SternPhase::PurePursuit:
      if (g.range <= prm.r_conversion) return SternPhase::FlyRelativeBearing;
      return s;
    case SternPhase::FlyRelativeBearing:
      if (g.range <= prm.r_turn_in) return SternPhase::Converting;
      if (lateral_displacement(p.own, target) >= prm.d_offset) return SternPhase::FlyingOffset;
      return s;
    case SternPhase::FlyingOffset:
      if (g.range <= prm.r_turn_in) return SternPhase::Converting;
      return s;
    case SternPhase::Converting:
      if (aa <= prm.capture_aa && ata <= prm.capture_ata) return SternPhase::Matching;
      return s;
    case SternPhase::Matching:
      if (aa > 2.0 * prm.capture_aa || ata > 2.0 * prm.capture_ata) return SternPhase::Converting;
      return s;
  }
  return s;
}

FlightCommand stern_command(SternPhase s, const Perception& p,
                            const SternConversionParams& prm, const SternKnobs& knobs) {
  const EntityState& target = require_target(p);
  const RelativeGeometry& g = *p.geometry;

  FlightCommand cmd;
  cmd.desired_altitude = target.z;
  cmd.desired_speed = knobs.intercept_speed;

  switch (s) {
    case SternPhase::PurePursuit:
      cmd.desired_heading = los_azimuth(p.own, target.x, target.y);
      break;
    case SternPhase::FlyRelativeBearing: {
      // Cut off the LOS to build displacement; side follows the ATA sign
      // (right-positive), so the cut deepens the current angle-off.
      const double side = g.ata >= 0.0 ? 1.0 : -1.0;
      cmd.desired_heading = wrap_pi(los_azimuth(p.own, target.x, target.y) - side * knobs.offset_cut);
      break;
    }
    case SternPhase::FlyingOffset:
      // Parallel the target's reciprocal course.
      cmd.desired_heading = wrap_pi(target.heading + pi);
      break;
    case SternPhase::Converting: {
      // Pursue a point one station length behind the target.
      const double ax = target.x - prm.r_station * std::cos(target.heading);
      const double ay = target.y - prm.r_station * std::sin(target.heading);
      cmd.desired_heading = los_azimuth(p.own, ax, ay);
      break;
    }
    case SternPhase::Matching:
      cmd.desired_heading = los_azimuth(p.own, target.x, target.y);
      cmd.desired_speed = target.speed + knobs.match_gain * (g.range - prm.r_station);
      break;
  }
  return cmd;
}

std::pair<SternPhase, FlightCommand> fsm_step(SternPhase s, const Perception& p,
                                              const SternConversionParams& prm,
                                              const SternKnobs& knobs) {
  const SternPhase next = stern_transition(s, p, prm);
  return {next, stern_command(next, p, prm, knobs)};
}

FsmSternAgent::FsmSternAgent(SternConversionParams prm, SternKnobs knobs)
    : prm_(prm), knobs_(knobs) {
  validate(prm_);
}

FlightCommand FsmSternAgent::decide(const Perception& p) {
  auto [next, cmd] = fsm_step(phase_, p, prm_, knobs_);
  phase_ = next;
  return cmd;
}

}  // namespace airmas
