#pragma once

#include "airmas/agent.hpp"

namespace airmas {

// Tunable parameters of the stern-conversion tactic. This vector is the
// genome of the evolutionary harness.
struct SternConversionParams {
  double r_conversion = 4000.0;         // m, switch from pursuit to offset building
  double d_offset = 2000.0;             // m, desired lateral displacement
  double r_turn_in = 1500.0;            // m, begin the conversion turn
  double r_station = 500.0;             // m, desired trail range
  double v_match_tol = 20.0;            // m/s
  double capture_aa = deg2rad(60.0);    // rad
  double capture_ata = deg2rad(30.0);   // rad
};

// Throws ConfigError when a field is non-positive or r_turn_in >= r_conversion.
void validate(const SternConversionParams& p);

// Non-evolved knobs of the baseline tactic.
struct SternKnobs {
  double intercept_speed = 250.0;       // m/s, commanded until speed matching starts
  double offset_cut = deg2rad(30.0);    // rad, cut off the LOS while building displacement
  double match_gain = 0.05;             // 1/s, closes range toward r_station via speed
};

enum class SternPhase { PurePursuit, FlyRelativeBearing, FlyingOffset, Converting, Matching };

const char* stern_phase_name(SternPhase s);

// Horizontal distance from `own` to the line through `target` along the
// target's heading.
double lateral_displacement(const EntityState& own, const EntityState& target);

// One forward transition per call, along the defined edges only:
// PurePursuit -> FlyRelativeBearing (range <= r_conversion)
// FlyRelativeBearing -> Converting (range <= r_turn_in)
//                    -> FlyingOffset (displacement >= d_offset)
// FlyingOffset -> Converting (range <= r_turn_in)
// Converting -> Matching (|aa| <= capture_aa and |ata| <= capture_ata)
// Matching -> Converting (capture angles lost by more than 2x)
SternPhase stern_transition(SternPhase s, const Perception& p, const SternConversionParams& prm);

// Command for the given phase. Requires a target in the perception.
FlightCommand stern_command(SternPhase s, const Perception& p,
                            const SternConversionParams& prm, const SternKnobs& knobs);

// Transition then command, as one decision step.
std::pair<SternPhase, FlightCommand> fsm_step(SternPhase s, const Perception& p,
                                              const SternConversionParams& prm,
                                              const SternKnobs& knobs = {});

class FsmSternAgent : public Agent {
 public:
  explicit FsmSternAgent(SternConversionParams prm, SternKnobs knobs = {});
  FlightCommand decide(const Perception& p) override;
  std::string state_label() const override { return stern_phase_name(phase_); }
  SternPhase phase() const { return phase_; }

 private:
  SternConversionParams prm_;
  SternKnobs knobs_;
  SternPhase phase_ = SternPhase::PurePursuit;
};

}  // namespace airmas
