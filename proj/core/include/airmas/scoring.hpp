#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "airmas/geometry.hpp"

namespace airmas {

struct ScoringConfig {
  double r_desired = 500.0;  // m, range at which the graded score peaks
  double k = 100.0;          // m, range-decay hyperparameter
  double r_min = 150.0;      // m
  double r_max = 1000.0;     // m
  double v_min = 20.0;       // m/s, speed-match threshold
  double t_hold = 3.0;       // s, contiguous hold required for episode success
};

struct ScoreSample {
  int s1 = 0;       // offensive-quadrant score, {0,1}
  double s2 = 0.0;  // graded angle+range score, [0,1]
  int s3 = 0;       // rear-quarter constraint score, {0,1}
  double time = 0.0;
};

struct ScoreSummary {
  double mean_s1 = 0.0;
  double mean_s2 = 0.0;
  double mean_s3 = 0.0;
  bool shaw_hold_success = false;
  // Seconds spent in each category, indexed by OrientationCategory.
  std::array<double, 4> time_in_category{};
};

// 1 iff the pair sits in the offensive quadrant: |aa| <= pi/2 and |ata| <= pi/2.
int score_s1(const RelativeGeometry& g);

// Graded score: 0.5*[(1 - |aa|/pi) + (1 - |ata|/pi)] * exp(-|R - R_d| / (pi k)).
double score_s2(const RelativeGeometry& g, const ScoringConfig& cfg);

// 1 iff |aa| <= pi/3, |ata| <= pi/6, r_min <= R <= r_max and delta_v <= v_min.
int score_s3(const RelativeGeometry& g, const ScoringConfig& cfg);

// True when a run of n consecutive s3=1 ticks spans at least t_hold seconds.
bool shaw_hold_met(std::int64_t run_ticks, double dt, double t_hold);

// Arithmetic means over ticks plus the contiguous-hold test. Throws
// std::invalid_argument on empty or mismatched inputs.
ScoreSummary aggregate_scores(const std::vector<ScoreSample>& samples,
                              const std::vector<OrientationCategory>& categories,
                              double dt, const ScoringConfig& cfg);

}  // namespace airmas
