#pragma once

// Internal helpers shared by the trace and scenario code: a deterministic
// JSON emitter (fixed key order, %.9g floats) and strict-key checks for
// nlohmann documents.

#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "airmas/errors.hpp"

namespace airmas::detail {

inline std::string fmt_g9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Appends key/value pairs with explicit ordering; the caller provides the
// structure (braces, commas) through the helpers.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { put('{'); fresh_ = true; }
  void end_object() { out_ += '}'; fresh_ = false; }
  void begin_array() { put('['); fresh_ = true; }
  void end_array() { out_ += ']'; fresh_ = false; }

  void key(const char* k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    fresh_ = true;
  }

  void value(double v) {
    comma();
    if (!std::isfinite(v)) throw SimError("json writer: non-finite value");
    out_ += fmt_g9(v);
  }
  void value(std::int64_t v) { comma(); out_ += std::to_string(v); }
  void value(std::uint64_t v) { comma(); out_ += std::to_string(v); }
  void value(int v) { comma(); out_ += std::to_string(v); }
  void value(bool v) { comma(); out_ += v ? "true" : "false"; }
  void value(const std::string& v) {
    comma();
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
  }
  void value(const char* v) { value(std::string(v)); }

 private:
  void put(char c) {
    comma();
    out_ += c;
  }
  void comma() {
    if (!fresh_) out_ += ',';
    fresh_ = false;
  }

  std::string out_;
  bool fresh_ = true;
};

// Fail-loud key policy: every key must be known, required keys must be
// present. `where` names the object in error messages.
inline void check_keys(const nlohmann::json& j, const std::string& where,
                       const std::set<std::string>& required,
                       const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
  }
}

inline double get_number(const nlohmann::json& j, const std::string& where, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

inline std::string get_string(const nlohmann::json& j, const std::string& where, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw ConfigError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace airmas::detail
