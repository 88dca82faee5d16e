#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "airmas/stern.hpp"

namespace airmas {

enum class BtStatus { Success, Failure, Running };

// Shared state for one tick: the perception snapshot, the agent's
// persistent memory (tactic parameters and the latched phase), and the
// command produced by whichever action leaf ran.
struct Blackboard {
  const Perception* perception = nullptr;
  SternConversionParams params;
  SternKnobs knobs;
  SternPhase phase = SternPhase::PurePursuit;
  std::optional<FlightCommand> command;
  std::string active_path;  // node path of the action that produced the command
};

struct BtNode {
  enum class Kind { Sequence, Selector, Condition, Action };

  Kind kind = Kind::Sequence;
  std::string name;
  std::vector<std::unique_ptr<BtNode>> children;           // composites
  std::function<bool(Blackboard&)> predicate;              // conditions
  std::function<BtStatus(Blackboard&)> behaviour;          // actions
};

using BtNodePtr = std::unique_ptr<BtNode>;

BtNodePtr make_sequence(std::string name, std::vector<BtNodePtr> children);
BtNodePtr make_selector(std::string name, std::vector<BtNodePtr> children);
// Condition and action leaves are looked up in the registry by identifier;
// unknown identifiers throw ConfigError at build time.
BtNodePtr make_condition(const std::string& id);
BtNodePtr make_action(const std::string& id);

const std::vector<std::string>& registered_condition_ids();
const std::vector<std::string>& registered_behaviour_ids();

// Standard tick semantics: a Sequence stops at the first non-Success
// child, a Selector at the first non-Failure child. Returns the root
// status and the command emitted by the action leaf that ran, if any.
std::pair<BtStatus, std::optional<FlightCommand>> bt_tick(const BtNode& root, Blackboard& bb);

// The baseline stern-conversion tree: a Selector over phase Sequences.
// It reproduces the FSM policy exactly; the phase latch lives in the
// blackboard and the guards combine it with the range/angle tests.
BtNodePtr make_stern_tree();

// Build a tree from a JSON document ({"type":"selector","children":[...]},
// {"type":"condition","id":...}, {"type":"action","id":...}). Malformed
// structure or unknown identifiers throw ConfigError.
BtNodePtr build_tree_from_json(const std::string& json_text);

class BtSternAgent : public Agent {
 public:
  explicit BtSternAgent(SternConversionParams prm, SternKnobs knobs = {});
  BtSternAgent(SternConversionParams prm, SternKnobs knobs, BtNodePtr tree);
  FlightCommand decide(const Perception& p) override;
  std::string state_label() const override { return label_; }
  SternPhase phase() const { return bb_.phase; }

 private:
  BtNodePtr root_;
  Blackboard bb_;
  std::string label_ = "bt";
};

}  // namespace airmas
