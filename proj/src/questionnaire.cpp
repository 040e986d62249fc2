#include "sure/questionnaire.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "csv.hpp"
#include "json_fields.hpp"
#include "markdown.hpp"

namespace sure {

using detail::index_path;
using detail::json;
using detail::ordered_json;

Scale default_scale() {
  return Scale{{
      {0, "Disagree at all"},
      {1, "Up to 30% agree"},
      {2, "31-50% agree"},
      {3, "51-75% agree"},
      {4, "76-100% agree"},
  }};
}

std::vector<Violation> validate_scale(const Scale& scale) {
  std::vector<Violation> out;
  if (scale.levels.size() < 2) {
    out.push_back({"invalid_scale", "scale", "a scale needs at least 2 levels"});
  }
  for (std::size_t i = 0; i < scale.levels.size(); ++i) {
    const auto& level = scale.levels[i];
    const std::string path = index_path("scale", i);
    if (level.code != static_cast<int>(i)) {
      out.push_back({"invalid_scale", path + ".code",
                     "expected code " + std::to_string(i) + ", found " +
                         std::to_string(level.code)});
    }
    if (level.label.empty()) {
      out.push_back({"invalid_scale", path + ".label", "label must not be empty"});
    }
  }
  return out;
}

Questionnaire generate_template(const GoalStructure& gs) {
  if (gs.status != Status::confirmed) {
    throw Error("structure_not_confirmed",
                "questions can only be prepared from a confirmed goal structure");
  }
  Questionnaire q;
  q.structure_version = gs.version;
  q.status = Status::draft;
  q.scale = default_scale();
  for (const auto& kg : gs.key_goals) {
    for (const auto& sg : kg.sub_goals) {
      q.questions.push_back(
          Question{"Q_" + sg.id, "Rate the statement: " + sg.label, sg.id});
    }
  }
  return q;
}

std::vector<Violation> validate_questionnaire(const Questionnaire& q,
                                              const GoalStructure& gs) {
  std::vector<Violation> out = validate_scale(q.scale);

  if (q.structure_version != gs.version) {
    out.push_back({"version_mismatch", "structure_version",
                   "questionnaire targets structure version \"" +
                       q.structure_version + "\" but the structure is \"" +
                       gs.version + "\""});
  }
  if (q.questions.empty()) {
    out.push_back({"empty_questionnaire", "questions",
                   "questionnaire has no questions"});
  }

  std::unordered_set<std::string> sub_ids;
  for (const auto& kg : gs.key_goals) {
    for (const auto& sg : kg.sub_goals) sub_ids.insert(sg.id);
  }

  std::unordered_map<std::string, std::size_t> seen;
  std::unordered_set<std::string> covered;
  for (std::size_t i = 0; i < q.questions.size(); ++i) {
    const auto& question = q.questions[i];
    const std::string path = index_path("questions", i);
    if (question.id.empty()) {
      out.push_back({"empty_question_id", path + ".id", "id must not be empty"});
    } else if (auto [it, inserted] = seen.emplace(question.id, i); !inserted) {
      out.push_back({"duplicate_question_id", path + ".id",
                     "question id \"" + question.id + "\" already used at " +
                         index_path("questions", it->second)});
    }
    if (sub_ids.count(question.sub_goal) == 0) {
      out.push_back({"unknown_sub_goal", path + ".sub_goal",
                     "sub goal \"" + question.sub_goal +
                         "\" does not exist in the structure"});
    } else {
      covered.insert(question.sub_goal);
    }
  }

  for (const auto& kg : gs.key_goals) {
    for (const auto& sg : kg.sub_goals) {
      if (covered.count(sg.id) == 0) {
        out.push_back({"uncovered_sub_goal", sg.id,
                       "no question measures sub goal \"" + sg.id + "\""});
      }
    }
  }
  return out;
}

Questionnaire confirm_questionnaire(const Questionnaire& q,
                                    const GoalStructure& gs) {
  auto violations = validate_questionnaire(q, gs);
  if (!violations.empty()) {
    throw ValidationError("invalid_questionnaire",
                          "cannot confirm an invalid questionnaire",
                          std::move(violations));
  }
  Questionnaire confirmed = q;
  confirmed.status = Status::confirmed;
  return confirmed;
}

namespace {

std::string render_markdown(const Questionnaire& q, const GoalStructure& gs) {
  std::string out = "# Questionnaire\n\n";
  out += "Structure version: " + q.structure_version + "\n\n";
  out += "Answer scale:";
  for (const auto& level : q.scale.levels) {
    out += (level.code == 0 ? " " : ", ") + std::to_string(level.code) +
           " = " + level.label;
  }
  out += "\n";

  std::string header = "| No. | Evaluation indicator |";
  std::string rule = "|---|---|";
  for (const auto& level : q.scale.levels) {
    header += " " + detail::md_cell(level.label) + " |";
    rule += "---|";
  }
  std::string blanks;
  for (int i = 0; i < q.scale.size(); ++i) blanks += "  |";

  for (const auto& kg : gs.key_goals) {
    out += "\n## " + kg.id + ": " + kg.label + "\n\n";
    out += header + "\n" + rule + "\n";
    int number = 0;
    for (const auto& question : q.questions) {
      if (gs.parent_of(question.sub_goal) != &kg) continue;
      out += "| " + std::to_string(++number) + ". | " +
             detail::md_cell(question.text) + " |" + blanks + "\n";
    }
  }
  return out;
}

std::string render_csv_header(const Questionnaire& q,
                              std::span<const std::string> demographics) {
  std::string out = "participant_id";
  for (const auto& d : demographics) out += "," + detail::csv_field(d);
  for (const auto& question : q.questions) {
    out += "," + detail::csv_field(question.id);
  }
  out += "\n";
  return out;
}

}  // namespace

std::string render_questionnaire(const Questionnaire& q,
                                 const GoalStructure& gs,
                                 QuestionnaireFormat format,
                                 std::span<const std::string> demographics) {
  auto violations = validate_questionnaire(q, gs);
  if (!violations.empty()) {
    throw ValidationError("invalid_questionnaire",
                          "cannot render an invalid questionnaire",
                          std::move(violations));
  }
  switch (format) {
    case QuestionnaireFormat::markdown:
      return render_markdown(q, gs);
    case QuestionnaireFormat::csv_header:
      return render_csv_header(q, demographics);
  }
  return {};
}

Questionnaire parse_questionnaire(std::string_view document) {
  const json doc = detail::parse_document(document, "questionnaire");
  detail::expect_object(doc, "");
  detail::reject_unknown_fields(
      doc, {"structure_version", "status", "scale", "questions"}, "");

  Questionnaire q;
  q.structure_version = detail::require_string(doc, "structure_version", "");
  q.status = parse_status(detail::require_string(doc, "status", ""));

  const json& levels = detail::require_array(doc, "scale", "");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string path = index_path("scale", i);
    detail::expect_object(levels[i], path);
    detail::reject_unknown_fields(levels[i], {"code", "label"}, path);
    const auto code = detail::require_integer(levels[i], "code", path);
    if (code < 0 || code > 1000) {
      throw Error("invalid_value", path + ".code: out of range");
    }
    q.scale.levels.push_back(ScaleLevel{
        static_cast<int>(code), detail::require_string(levels[i], "label", path)});
  }

  const json& questions = detail::require_array(doc, "questions", "");
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const std::string path = index_path("questions", i);
    detail::expect_object(questions[i], path);
    detail::reject_unknown_fields(questions[i], {"id", "text", "sub_goal"}, path);
    q.questions.push_back(Question{
        detail::require_string(questions[i], "id", path),
        detail::require_string(questions[i], "text", path),
        detail::require_string(questions[i], "sub_goal", path)});
  }
  return q;
}

std::string serialize_questionnaire(const Questionnaire& q) {
  ordered_json doc;
  doc["structure_version"] = q.structure_version;
  doc["status"] = to_string(q.status);
  ordered_json levels = ordered_json::array();
  for (const auto& level : q.scale.levels) {
    levels.push_back({{"code", level.code}, {"label", level.label}});
  }
  doc["scale"] = std::move(levels);
  ordered_json questions = ordered_json::array();
  for (const auto& question : q.questions) {
    questions.push_back({{"id", question.id},
                         {"text", question.text},
                         {"sub_goal", question.sub_goal}});
  }
  doc["questions"] = std::move(questions);
  return doc.dump(2) + "\n";
}

}  // namespace sure
