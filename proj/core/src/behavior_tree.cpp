#include "airmas/behavior_tree.hpp"

#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

namespace airmas {

namespace {

struct Guards {
  bool capture = false;
  bool lost2x = false;
  bool inside_turn_in = false;
  bool inside_conversion = false;
  bool offset_built = false;
};

Guards eval_guards(const Blackboard& bb) {
  const Perception& p = *bb.perception;
  const EntityState* target = p.target();
  if (target == nullptr || !p.geometry) {
    throw MissingTargetError("stern conversion requires a target contact");
  }
  const RelativeGeometry& g = *p.geometry;
  const double aa = std::abs(g.aa);
  const double ata = std::abs(g.ata);
  Guards gd;
  gd.capture = aa <= bb.params.capture_aa && ata <= bb.params.capture_ata;
  gd.lost2x = aa > 2.0 * bb.params.capture_aa || ata > 2.0 * bb.params.capture_ata;
  gd.inside_turn_in = g.range <= bb.params.r_turn_in;
  gd.inside_conversion = g.range <= bb.params.r_conversion;
  gd.offset_built = lateral_displacement(p.own, *target) >= bb.params.d_offset;
  return gd;
}

// Phase gates. Each one latches the phase it admits, mirroring the FSM
// edges one transition per tick.
bool can_match(Blackboard& bb) {
  const Guards gd = eval_guards(bb);
  const bool ok = (bb.phase == SternPhase::Converting && gd.capture) ||
                  (bb.phase == SternPhase::Matching && !gd.lost2x);
  if (ok) bb.phase = SternPhase::Matching;
  return ok;
}

bool can_convert(Blackboard& bb) {
  const Guards gd = eval_guards(bb);
  const bool ok = (bb.phase == SternPhase::Converting && !gd.capture) ||
                  (bb.phase == SternPhase::Matching && gd.lost2x) ||
                  ((bb.phase == SternPhase::FlyRelativeBearing ||
                    bb.phase == SternPhase::FlyingOffset) &&
                   gd.inside_turn_in);
  if (ok) bb.phase = SternPhase::Converting;
  return ok;
}

bool can_fly_offset(Blackboard& bb) {
  const Guards gd = eval_guards(bb);
  const bool ok = (bb.phase == SternPhase::FlyingOffset && !gd.inside_turn_in) ||
                  (bb.phase == SternPhase::FlyRelativeBearing && !gd.inside_turn_in &&
                   gd.offset_built);
  if (ok) bb.phase = SternPhase::FlyingOffset;
  return ok;
}

bool can_fly_relative_bearing(Blackboard& bb) {
  const Guards gd = eval_guards(bb);
  const bool ok = (bb.phase == SternPhase::FlyRelativeBearing && !gd.inside_turn_in &&
                   !gd.offset_built) ||
                  (bb.phase == SternPhase::PurePursuit && gd.inside_conversion);
  if (ok) bb.phase = SternPhase::FlyRelativeBearing;
  return ok;
}

BtStatus emit_phase_command(Blackboard& bb, SternPhase phase) {
  bb.command = stern_command(phase, *bb.perception, bb.params, bb.knobs);
  return BtStatus::Success;
}

using PredicateFn = bool (*)(Blackboard&);
using BehaviourFn = BtStatus (*)(Blackboard&);

const std::map<std::string, PredicateFn>& condition_registry() {
  static const std::map<std::string, PredicateFn> reg = {
      {"can_match", &can_match},
      {"can_convert", &can_convert},
      {"can_fly_offset", &can_fly_offset},
      {"can_fly_relative_bearing", &can_fly_relative_bearing},
  };
  return reg;
}

const std::map<std::string, BehaviourFn>& behaviour_registry() {
  static const std::map<std::string, BehaviourFn> reg = {
      {"match_speed",
       [](Blackboard& bb) { return emit_phase_command(bb, SternPhase::Matching); }},
      {"convert",
       [](Blackboard& bb) { return emit_phase_command(bb, SternPhase::Converting); }},
      {"fly_offset",
       [](Blackboard& bb) { return emit_phase_command(bb, SternPhase::FlyingOffset); }},
      {"fly_relative_bearing",
       [](Blackboard& bb) { return emit_phase_command(bb, SternPhase::FlyRelativeBearing); }},
      {"pure_pursuit",
       [](Blackboard& bb) { return emit_phase_command(bb, SternPhase::PurePursuit); }},
  };
  return reg;
}

BtStatus tick_node(const BtNode& node, Blackboard& bb, std::string& path) {
  const size_t mark = path.size();
  if (!path.empty()) path += '/';
  path += node.name;

  BtStatus status = BtStatus::Failure;
  switch (node.kind) {
    case BtNode::Kind::Sequence:
      status = BtStatus::Success;
      for (const auto& child : node.children) {
        const BtStatus s = tick_node(*child, bb, path);
        if (s != BtStatus::Success) {
          status = s;
          break;
        }
      }
      break;
    case BtNode::Kind::Selector:
      status = BtStatus::Failure;
      for (const auto& child : node.children) {
        const BtStatus s = tick_node(*child, bb, path);
        if (s != BtStatus::Failure) {
          status = s;
          break;
        }
      }
      break;
    case BtNode::Kind::Condition:
      status = node.predicate(bb) ? BtStatus::Success : BtStatus::Failure;
      break;
    case BtNode::Kind::Action:
      status = node.behaviour(bb);
      if (status != BtStatus::Failure) bb.active_path = path;
      break;
  }
  path.resize(mark);
  return status;
}

BtNodePtr composite(BtNode::Kind kind, std::string name, std::vector<BtNodePtr> children) {
  if (children.empty()) {
    throw ConfigError("behaviour tree: composite '" + name + "' has no children");
  }
  auto node = std::make_unique<BtNode>();
  node->kind = kind;
  node->name = std::move(name);
  node->children = std::move(children);
  return node;
}

}  // namespace

BtNodePtr make_sequence(std::string name, std::vector<BtNodePtr> children) {
  return composite(BtNode::Kind::Sequence, std::move(name), std::move(children));
}

BtNodePtr make_selector(std::string name, std::vector<BtNodePtr> children) {
  return composite(BtNode::Kind::Selector, std::move(name), std::move(children));
}

BtNodePtr make_condition(const std::string& id) {
  const auto& reg = condition_registry();
  const auto it = reg.find(id);
  if (it == reg.end()) throw ConfigError("behaviour tree: unknown condition id '" + id + "'");
  auto node = std::make_unique<BtNode>();
  node->kind = BtNode::Kind::Condition;
  node->name = id;
  node->predicate = it->second;
  return node;
}

BtNodePtr make_action(const std::string& id) {
  const auto& reg = behaviour_registry();
  const auto it = reg.find(id);
  if (it == reg.end()) throw ConfigError("behaviour tree: unknown behaviour id '" + id + "'");
  auto node = std::make_unique<BtNode>();
  node->kind = BtNode::Kind::Action;
  node->name = id;
  node->behaviour = it->second;
  return node;
}

const std::vector<std::string>& registered_condition_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : condition_registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

const std::vector<std::string>& registered_behaviour_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : behaviour_registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::pair<BtStatus, std::optional<FlightCommand>> bt_tick(const BtNode& root, Blackboard& bb) {
  bb.command.reset();
  bb.active_path.clear();
  std::string path;
  const BtStatus status = tick_node(root, bb, path);
  return {status, bb.command};
}

BtNodePtr make_stern_tree() {
  auto phase = [](const char* seq_name, const char* cond, const char* act) {
    std::vector<BtNodePtr> pair;
    pair.push_back(make_condition(cond));
    pair.push_back(make_action(act));
    return make_sequence(seq_name, std::move(pair));
  };
  std::vector<BtNodePtr> arms;
  arms.push_back(phase("matching", "can_match", "match_speed"));
  arms.push_back(phase("converting", "can_convert", "convert"));
  arms.push_back(phase("flying_offset", "can_fly_offset", "fly_offset"));
  arms.push_back(phase("relative_bearing", "can_fly_relative_bearing", "fly_relative_bearing"));
  arms.push_back(make_action("pure_pursuit"));
  return make_selector("stern_conversion", std::move(arms));
}

namespace {

BtNodePtr build_node(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError("behaviour tree: " + path + " must be an object");
  if (!j.contains("type")) throw ConfigError("behaviour tree: " + path + " missing 'type'");
  const std::string type = j.at("type").get<std::string>();

  for (const auto& [key, value] : j.items()) {
    if (key != "type" && key != "name" && key != "children" && key != "id") {
      throw ConfigError("behaviour tree: unknown key '" + key + "' at " + path);
    }
  }

  if (type == "sequence" || type == "selector") {
    if (j.contains("id")) throw ConfigError("behaviour tree: composite at " + path + " takes no 'id'");
    if (!j.contains("children") || !j.at("children").is_array()) {
      throw ConfigError("behaviour tree: composite at " + path + " needs a 'children' array");
    }
    std::vector<BtNodePtr> children;
    size_t i = 0;
    for (const auto& child : j.at("children")) {
      children.push_back(build_node(child, path + "/children[" + std::to_string(i++) + "]"));
    }
    const std::string name = j.value("name", type);
    return type == "sequence" ? make_sequence(name, std::move(children))
                              : make_selector(name, std::move(children));
  }
  if (type == "condition" || type == "action") {
    if (j.contains("children")) {
      throw ConfigError("behaviour tree: leaf at " + path + " takes no 'children'");
    }
    if (!j.contains("id")) throw ConfigError("behaviour tree: leaf at " + path + " missing 'id'");
    const std::string id = j.at("id").get<std::string>();
    return type == "condition" ? make_condition(id) : make_action(id);
  }
  throw ConfigError("behaviour tree: unknown node type '" + type + "' at " + path);
}

}  // namespace

BtNodePtr build_tree_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("behaviour tree: invalid JSON: ") + e.what());
  }
  return build_node(j, "tree");
}

BtSternAgent::BtSternAgent(SternConversionParams prm, SternKnobs knobs)
    : BtSternAgent(prm, knobs, make_stern_tree()) {}

BtSternAgent::BtSternAgent(SternConversionParams prm, SternKnobs knobs, BtNodePtr tree)
    : root_(std::move(tree)) {
  validate(prm);
  bb_.params = prm;
  bb_.knobs = knobs;
}

FlightCommand BtSternAgent::decide(const Perception& p) {
  bb_.perception = &p;
  auto [status, cmd] = bt_tick(*root_, bb_);
  bb_.perception = nullptr;
  if (!cmd) {
    throw SimError("behaviour tree produced no command (status " +
                   std::to_string(static_cast<int>(status)) + ")");
  }
  label_ = bb_.active_path;
  return *cmd;
}

}  // namespace airmas
