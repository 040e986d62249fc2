#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sure/error.hpp"
#include "sure/goal_structure.hpp"

namespace sure {

struct ScaleLevel {
  int code = 0;
  std::string label;

  friend bool operator==(const ScaleLevel&, const ScaleLevel&) = default;
};

// Ordered answer levels with codes 0..L-1.
struct Scale {
  std::vector<ScaleLevel> levels;

  int size() const { return static_cast<int>(levels.size()); }
  int max_code() const { return size() - 1; }

  friend bool operator==(const Scale&, const Scale&) = default;
};

struct Question {
  std::string id;
  std::string text;
  std::string sub_goal;

  friend bool operator==(const Question&, const Question&) = default;
};

struct Questionnaire {
  std::string structure_version;
  Status status = Status::draft;
  Scale scale;
  std::vector<Question> questions;

  friend bool operator==(const Questionnaire&, const Questionnaire&) = default;
};

// Five agreement levels, "Disagree at all" (0) through "76-100% agree" (4).
Scale default_scale();

std::vector<Violation> validate_scale(const Scale& scale);

// One draft question per sub goal, id "Q_" + sub-goal id, default scale.
// Throws Error("structure_not_confirmed") for a draft structure.
Questionnaire generate_template(const GoalStructure& gs);

// Empty iff the scale is well formed, question ids are unique and non-empty,
// every question points at an existing sub goal and every sub goal has at
// least one question. Codes: invalid_scale, empty_questionnaire,
// duplicate_question_id, empty_question_id, unknown_sub_goal,
// uncovered_sub_goal, version_mismatch.
std::vector<Violation> validate_questionnaire(const Questionnaire& q,
                                              const GoalStructure& gs);

// Confirmed copy of `q`; throws ValidationError("invalid_questionnaire").
Questionnaire confirm_questionnaire(const Questionnaire& q,
                                    const GoalStructure& gs);

enum class QuestionnaireFormat { markdown, csv_header };

// markdown: one agreement grid per key goal. csv_header: the header line a
// response CSV must carry, "participant_id", the demographic columns, then
// every question id. Throws ValidationError("invalid_questionnaire").
std::string render_questionnaire(const Questionnaire& q,
                                 const GoalStructure& gs,
                                 QuestionnaireFormat format,
                                 std::span<const std::string> demographics = {});

// Strict decoding of the questionnaire JSON document. Cross-checks against a
// structure are left to validate_questionnaire.
Questionnaire parse_questionnaire(std::string_view document);

std::string serialize_questionnaire(const Questionnaire& q);

}  // namespace sure
