#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sure/error.hpp"

namespace sure {

enum class Status { draft, confirmed };

std::string_view to_string(Status status);
// Throws Error("invalid_value") for anything but "draft" / "confirmed".
Status parse_status(std::string_view text);

struct SubGoal {
  std::string id;
  std::string label;

  friend bool operator==(const SubGoal&, const SubGoal&) = default;
};

// A key goal is reached when any of its sub goals is reached.
struct KeyGoal {
  std::string id;
  std::string label;
  std::vector<SubGoal> sub_goals;

  friend bool operator==(const KeyGoal&, const KeyGoal&) = default;
};

struct Confirmation {
  std::vector<std::string> approvers;
  std::string date;

  friend bool operator==(const Confirmation&, const Confirmation&) = default;
};

// Two-level goal hierarchy. The evaluation succeeds only when every key goal
// is reached. Document order of goals is preserved everywhere downstream.
struct GoalStructure {
  std::string title;
  std::string version;
  Status status = Status::draft;
  std::optional<Confirmation> confirmation;
  std::vector<KeyGoal> key_goals;

  std::size_t sub_goal_count() const;
  const KeyGoal* find_key_goal(std::string_view id) const;
  // Key goal owning sub goal `id`, or nullptr.
  const KeyGoal* parent_of(std::string_view sub_goal_id) const;

  friend bool operator==(const GoalStructure&, const GoalStructure&) = default;
};

// Strict decoding of the goal-structure JSON document without checking the
// structural invariants. Throws Error on syntax errors (with line/column),
// unknown fields, missing fields and wrong types.
GoalStructure decode_structure(std::string_view document);

// decode_structure followed by validate_structure; throws ValidationError
// when any invariant is broken.
GoalStructure parse_structure(std::string_view document);

std::string serialize_structure(const GoalStructure& gs);

// Empty iff every invariant holds. Codes: empty_structure, no_sub_goals,
// empty_id, duplicate_id, missing_confirmation, empty_approvers.
std::vector<Violation> validate_structure(const GoalStructure& gs);

// Returns a confirmed copy; `gs` is left untouched. Throws ValidationError
// ("invalid_structure") when violations exist and Error("empty_approvers")
// for an empty approver list.
GoalStructure confirm_structure(const GoalStructure& gs,
                                std::vector<std::string> approvers,
                                std::string date);

}  // namespace sure
