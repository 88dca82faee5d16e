#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "airmas/scoring.hpp"

namespace airmas {

// Round to the 9-significant-digit representable double. Trace fields are
// quantized with this at record creation so serialize/parse round-trips
// bit-exactly and files are byte-stable.
double quantize9(double x);

struct TraceEntityState {
  std::string id;
  double x = 0.0, y = 0.0, z = 0.0;
  double psi = 0.0, gamma = 0.0, phi = 0.0;
  double v = 0.0;
  std::string agent_state;
};

struct TraceRecord {
  std::int64_t tick = 0;
  double time = 0.0;
  std::vector<TraceEntityState> entities;  // ordered by entity id
  RelativeGeometry geometry;               // scored pair, quantized
  int s1 = 0;
  double s2 = 0.0;
  int s3 = 0;
  OrientationCategory category = OrientationCategory::Neutral;
};

// Episode-level context written as the final line of a trace file so the
// analyzer can rebuild the summary without the scenario file.
struct TraceMeta {
  double dt = 0.1;
  std::uint64_t seed = 0;
  double duration = 0.0;          // configured episode duration, s
  double collision_floor = 50.0;  // m
  std::string termination;        // "shaw_hold" | "collision" | "time_limit"
  ScoringConfig scoring;
};

// One record per line, fixed key order, floats at 9 significant digits.
std::string serialize_trace(const std::vector<TraceRecord>& records);

// Inverse of serialize_trace. Throws ConfigError naming the bad line.
std::vector<TraceRecord> parse_trace(const std::string& text);

// Trace file = serialized records + one trailing meta line.
void write_trace_file(const std::string& path, const std::vector<TraceRecord>& records,
                      const TraceMeta& meta);
void read_trace_file(const std::string& path, std::vector<TraceRecord>& records,
                     TraceMeta& meta);

// CSV with header time,abs_aa_deg,abs_ata_deg,range_m,category; one row
// per tick. Throws on an empty trace.
std::string export_orientation_csv(const std::vector<TraceRecord>& records);

struct SummaryReport {
  ScoreSummary scores;
  std::int64_t ticks = 0;
  double dt = 0.0;
  double duration_s = 0.0;  // simulated, ticks * dt
  std::uint64_t seed = 0;
  std::string termination;
  RelativeGeometry final_geometry;
  OrientationCategory final_category = OrientationCategory::Neutral;
};

// Wraps aggregate_scores and adds episode metadata. An empty termination
// string is derived from the records (shaw_hold if the hold was met).
SummaryReport summarize(const std::vector<TraceRecord>& records, const ScoringConfig& cfg,
                        const std::string& termination = "", std::uint64_t seed = 0);

SummaryReport summarize(const std::vector<TraceRecord>& records, const TraceMeta& meta);

std::string summary_to_json(const SummaryReport& report);

}  // namespace airmas
