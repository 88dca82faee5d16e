#include "airmas/scoring.hpp"

#include <cmath>
#include <stdexcept>

namespace airmas {

int score_s1(const RelativeGeometry& g) {
  return (std::abs(g.aa) <= pi / 2.0 && std::abs(g.ata) <= pi / 2.0) ? 1 : 0;
}

double score_s2(const RelativeGeometry& g, const ScoringConfig& cfg) {
  const double angular =
      0.5 * ((1.0 - std::abs(g.aa) / pi) + (1.0 - std::abs(g.ata) / pi));
  const double range_factor = std::exp(-std::abs(g.range - cfg.r_desired) / (pi * cfg.k));
  return angular * range_factor;
}

int score_s3(const RelativeGeometry& g, const ScoringConfig& cfg) {
  const bool ok = std::abs(g.aa) <= pi / 3.0 && std::abs(g.ata) <= pi / 6.0 &&
                  cfg.r_min <= g.range && g.range <= cfg.r_max &&
                  g.delta_v <= cfg.v_min;
  return ok ? 1 : 0;
}

bool shaw_hold_met(std::int64_t run_ticks, double dt, double t_hold) {
  if (t_hold <= 0.0) return true;
  return static_cast<double>(run_ticks) * dt >= t_hold - 1e-9;
}

ScoreSummary aggregate_scores(const std::vector<ScoreSample>& samples,
                              const std::vector<OrientationCategory>& categories,
                              double dt, const ScoringConfig& cfg) {
  if (samples.empty()) throw std::invalid_argument("aggregate_scores: empty trace");
  if (samples.size() != categories.size()) {
    throw std::invalid_argument("aggregate_scores: samples/categories length mismatch");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("aggregate_scores: dt must be > 0");

  ScoreSummary out;
  double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
  std::int64_t run = 0, best_run = 0;
  for (size_t i = 0; i < samples.size(); ++i) {
    sum1 += samples[i].s1;
    sum2 += samples[i].s2;
    sum3 += samples[i].s3;
    run = samples[i].s3 == 1 ? run + 1 : 0;
    best_run = std::max(best_run, run);
    out.time_in_category[static_cast<size_t>(categories[i])] += dt;
  }
  const double n = static_cast<double>(samples.size());
  out.mean_s1 = sum1 / n;
  out.mean_s2 = sum2 / n;
  out.mean_s3 = sum3 / n;
  out.shaw_hold_success = shaw_hold_met(best_run, dt, cfg.t_hold);
  return out;
}

}  // namespace airmas
