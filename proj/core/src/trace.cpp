#include "airmas/trace.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json_io.hpp"

namespace airmas {

using detail::JsonWriter;

double quantize9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

namespace {

void write_geometry(JsonWriter& w, const RelativeGeometry& g) {
  w.begin_object();
  w.key("ata");
  w.value(g.ata);
  w.key("aa");
  w.value(g.aa);
  w.key("range");
  w.value(g.range);
  w.key("delta_v");
  w.value(g.delta_v);
  w.key("bearing");
  w.value(g.bearing);
  w.end_object();
}

std::string record_to_line(const TraceRecord& r) {
  JsonWriter w;
  w.begin_object();
  w.key("tick");
  w.value(r.tick);
  w.key("time");
  w.value(r.time);
  w.key("entities");
  w.begin_array();
  for (const auto& e : r.entities) {
    w.begin_object();
    w.key("id");
    w.value(e.id);
    w.key("x");
    w.value(e.x);
    w.key("y");
    w.value(e.y);
    w.key("z");
    w.value(e.z);
    w.key("psi");
    w.value(e.psi);
    w.key("gamma");
    w.value(e.gamma);
    w.key("phi");
    w.value(e.phi);
    w.key("v");
    w.value(e.v);
    w.key("agent_state");
    w.value(e.agent_state);
    w.end_object();
  }
  w.end_array();
  w.key("geometry");
  write_geometry(w, r.geometry);
  w.key("scores");
  w.begin_object();
  w.key("s1");
  w.value(r.s1);
  w.key("s2");
  w.value(r.s2);
  w.key("s3");
  w.value(r.s3);
  w.end_object();
  w.key("category");
  w.value(category_name(r.category));
  w.end_object();
  return w.take();
}

std::string meta_to_line(const TraceMeta& m) {
  JsonWriter w;
  w.begin_object();
  w.key("meta");
  w.begin_object();
  w.key("dt");
  w.value(m.dt);
  w.key("seed");
  w.value(static_cast<std::uint64_t>(m.seed));
  w.key("duration");
  w.value(m.duration);
  w.key("collision_floor");
  w.value(m.collision_floor);
  w.key("termination");
  w.value(m.termination);
  w.key("scoring");
  w.begin_object();
  w.key("r_desired");
  w.value(m.scoring.r_desired);
  w.key("k");
  w.value(m.scoring.k);
  w.key("r_min");
  w.value(m.scoring.r_min);
  w.key("r_max");
  w.value(m.scoring.r_max);
  w.key("v_min");
  w.value(m.scoring.v_min);
  w.key("t_hold");
  w.value(m.scoring.t_hold);
  w.end_object();
  w.end_object();
  w.end_object();
  return w.take();
}

TraceRecord record_from_json(const nlohmann::json& j, const std::string& where) {
  detail::check_keys(j, where, {"tick", "time", "entities", "geometry", "scores", "category"});
  TraceRecord r;
  r.tick = j.at("tick").get<std::int64_t>();
  r.time = detail::get_number(j, where, "time");

  const auto& ents = j.at("entities");
  if (!ents.is_array()) throw ConfigError(where + ".entities: expected an array");
  for (size_t i = 0; i < ents.size(); ++i) {
    const std::string ewhere = where + ".entities[" + std::to_string(i) + "]";
    const auto& je = ents[i];
    detail::check_keys(je, ewhere, {"id", "x", "y", "z", "psi", "gamma", "phi", "v", "agent_state"});
    TraceEntityState e;
    e.id = detail::get_string(je, ewhere, "id");
    e.x = detail::get_number(je, ewhere, "x");
    e.y = detail::get_number(je, ewhere, "y");
    e.z = detail::get_number(je, ewhere, "z");
    e.psi = detail::get_number(je, ewhere, "psi");
    e.gamma = detail::get_number(je, ewhere, "gamma");
    e.phi = detail::get_number(je, ewhere, "phi");
    e.v = detail::get_number(je, ewhere, "v");
    e.agent_state = detail::get_string(je, ewhere, "agent_state");
    r.entities.push_back(std::move(e));
  }

  const auto& jg = j.at("geometry");
  detail::check_keys(jg, where + ".geometry", {"ata", "aa", "range", "delta_v", "bearing"});
  r.geometry.ata = detail::get_number(jg, where + ".geometry", "ata");
  r.geometry.aa = detail::get_number(jg, where + ".geometry", "aa");
  r.geometry.range = detail::get_number(jg, where + ".geometry", "range");
  r.geometry.delta_v = detail::get_number(jg, where + ".geometry", "delta_v");
  r.geometry.bearing = detail::get_number(jg, where + ".geometry", "bearing");

  const auto& js = j.at("scores");
  detail::check_keys(js, where + ".scores", {"s1", "s2", "s3"});
  r.s1 = js.at("s1").get<int>();
  r.s2 = detail::get_number(js, where + ".scores", "s2");
  r.s3 = js.at("s3").get<int>();

  r.category = category_from_name(detail::get_string(j, where, "category"));
  return r;
}

TraceMeta meta_from_json(const nlohmann::json& j, const std::string& where) {
  detail::check_keys(j, where, {"meta"});
  const auto& jm = j.at("meta");
  detail::check_keys(jm, where + ".meta",
                     {"dt", "seed", "duration", "collision_floor", "termination", "scoring"});
  TraceMeta m;
  m.dt = detail::get_number(jm, where + ".meta", "dt");
  m.seed = jm.at("seed").get<std::uint64_t>();
  m.duration = detail::get_number(jm, where + ".meta", "duration");
  m.collision_floor = detail::get_number(jm, where + ".meta", "collision_floor");
  m.termination = detail::get_string(jm, where + ".meta", "termination");
  const auto& js = jm.at("scoring");
  const std::string swhere = where + ".meta.scoring";
  detail::check_keys(js, swhere, {"r_desired", "k", "r_min", "r_max", "v_min", "t_hold"});
  m.scoring.r_desired = detail::get_number(js, swhere, "r_desired");
  m.scoring.k = detail::get_number(js, swhere, "k");
  m.scoring.r_min = detail::get_number(js, swhere, "r_min");
  m.scoring.r_max = detail::get_number(js, swhere, "r_max");
  m.scoring.v_min = detail::get_number(js, swhere, "v_min");
  m.scoring.t_hold = detail::get_number(js, swhere, "t_hold");
  return m;
}

nlohmann::json parse_line(const std::string& line, size_t line_no) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("trace line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
  }
}

}  // namespace

std::string serialize_trace(const std::vector<TraceRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += record_to_line(r);
    out += '\n';
  }
  return out;
}

std::vector<TraceRecord> parse_trace(const std::string& text) {
  std::vector<TraceRecord> records;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto j = parse_line(line, line_no);
    try {
      records.push_back(record_from_json(j, "record"));
    } catch (const ConfigError& e) {
      throw ConfigError("trace line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

void write_trace_file(const std::string& path, const std::vector<TraceRecord>& records,
                      const TraceMeta& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot open trace file for writing: " + path);
  out << serialize_trace(records);
  out << meta_to_line(meta) << '\n';
  if (!out) throw SimError("failed writing trace file: " + path);
}

void read_trace_file(const std::string& path, std::vector<TraceRecord>& records, TraceMeta& meta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open trace file: " + path);

  records.clear();
  bool have_meta = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (have_meta) {
      throw ConfigError("trace line " + std::to_string(line_no) + ": data after meta trailer");
    }
    const auto j = parse_line(line, line_no);
    try {
      if (j.is_object() && j.contains("meta")) {
        meta = meta_from_json(j, "trailer");
        have_meta = true;
      } else {
        records.push_back(record_from_json(j, "record"));
      }
    } catch (const ConfigError& e) {
      throw ConfigError("trace line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_meta) {
    throw ConfigError("trace file " + path + ": missing meta trailer line");
  }
}

std::string export_orientation_csv(const std::vector<TraceRecord>& records) {
  if (records.empty()) throw std::invalid_argument("export_orientation_csv: empty trace");
  std::string out = "time,abs_aa_deg,abs_ata_deg,range_m,category\n";
  for (const auto& r : records) {
    out += detail::fmt_g9(r.time);
    out += ',';
    out += detail::fmt_g9(rad2deg(std::abs(r.geometry.aa)));
    out += ',';
    out += detail::fmt_g9(rad2deg(std::abs(r.geometry.ata)));
    out += ',';
    out += detail::fmt_g9(r.geometry.range);
    out += ',';
    out += category_name(r.category);
    out += '\n';
  }
  return out;
}

SummaryReport summarize(const std::vector<TraceRecord>& records, const ScoringConfig& cfg,
                        const std::string& termination, std::uint64_t seed) {
  if (records.empty()) throw std::invalid_argument("summarize: empty trace");
  if (records.front().tick != 0) throw std::invalid_argument("summarize: trace must start at tick 0");

  std::vector<ScoreSample> samples;
  std::vector<OrientationCategory> categories;
  samples.reserve(records.size());
  categories.reserve(records.size());
  for (const auto& r : records) {
    samples.push_back({r.s1, r.s2, r.s3, r.time});
    categories.push_back(r.category);
  }

  SummaryReport rep;
  rep.dt = records.front().time;  // time of tick 0 is one dt
  rep.ticks = static_cast<std::int64_t>(records.size());
  rep.duration_s = static_cast<double>(rep.ticks) * rep.dt;
  rep.seed = seed;
  rep.scores = aggregate_scores(samples, categories, rep.dt, cfg);
  rep.termination = !termination.empty()
                        ? termination
                        : (rep.scores.shaw_hold_success ? "shaw_hold" : "time_limit");
  rep.final_geometry = records.back().geometry;
  rep.final_category = records.back().category;
  return rep;
}

SummaryReport summarize(const std::vector<TraceRecord>& records, const TraceMeta& meta) {
  return summarize(records, meta.scoring, meta.termination, meta.seed);
}

std::string summary_to_json(const SummaryReport& rep) {
  JsonWriter w;
  w.begin_object();
  w.key("episode");
  w.begin_object();
  w.key("ticks");
  w.value(rep.ticks);
  w.key("dt");
  w.value(rep.dt);
  w.key("duration_s");
  w.value(rep.duration_s);
  w.key("seed");
  w.value(static_cast<std::uint64_t>(rep.seed));
  w.key("termination");
  w.value(rep.termination);
  w.end_object();
  w.key("scores");
  w.begin_object();
  w.key("mean_s1");
  w.value(rep.scores.mean_s1);
  w.key("mean_s2");
  w.value(rep.scores.mean_s2);
  w.key("mean_s3");
  w.value(rep.scores.mean_s3);
  w.key("shaw_hold_success");
  w.value(rep.scores.shaw_hold_success);
  w.end_object();
  w.key("time_in_category");
  w.begin_object();
  for (int c = 0; c < 4; ++c) {
    w.key(category_name(static_cast<OrientationCategory>(c)));
    w.value(rep.scores.time_in_category[static_cast<size_t>(c)]);
  }
  w.end_object();
  w.key("final_geometry");
  w.begin_object();
  w.key("ata");
  w.value(rep.final_geometry.ata);
  w.key("aa");
  w.value(rep.final_geometry.aa);
  w.key("range");
  w.value(rep.final_geometry.range);
  w.key("delta_v");
  w.value(rep.final_geometry.delta_v);
  w.key("bearing");
  w.value(rep.final_geometry.bearing);
  w.key("category");
  w.value(category_name(rep.final_category));
  w.end_object();
  w.end_object();
  std::string s = w.take();
  s += '\n';
  return s;
}

}  // namespace airmas
