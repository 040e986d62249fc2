#include "sure/ingest.hpp"

#include <charconv>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "csv.hpp"

namespace sure {

std::string_view to_string(MissingPolicy policy) {
  return policy == MissingPolicy::treat_as_zero ? "treat_as_zero"
                                                : "exclude_participant";
}

double normalize(int code, const Scale& scale) {
  const int top = scale.max_code();
  if (top < 1 || code < 0 || code > top) {
    throw Error("out_of_range", "level code " + std::to_string(code) +
                                    " outside 0.." + std::to_string(top));
  }
  return static_cast<double>(code) / static_cast<double>(top);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

std::string at(std::size_t line) { return "line " + std::to_string(line); }

struct ColumnBinding {
  enum class Kind { demographic, question } kind;
  std::size_t index;  // into demographics or questions
};

void check_inputs(const Questionnaire& q,
                  std::span<const std::string> demographics) {
  auto scale_violations = validate_scale(q.scale);
  if (!scale_violations.empty()) {
    throw ValidationError("invalid_scale", "questionnaire scale is invalid",
                          std::move(scale_violations));
  }
  std::unordered_set<std::string> names{"participant_id"};
  for (const auto& question : q.questions) {
    if (!names.insert(question.id).second) {
      throw Error("duplicate_question_id",
                  "question id \"" + question.id + "\" is not unique");
    }
  }
  for (const auto& d : demographics) {
    if (d.empty()) {
      throw Error("invalid_demographics", "demographic column names must not be empty");
    }
    if (!names.insert(d).second) {
      throw Error("invalid_demographics",
                  "demographic column \"" + d +
                      "\" clashes with another column name");
    }
  }
}

}  // namespace

ResponseSet parse_responses(std::string_view csv, const Questionnaire& q,
                            std::span<const std::string> demographics,
                            MissingPolicy policy) {
  check_inputs(q, demographics);

  const auto rows = detail::read_csv(csv);
  if (rows.empty()) {
    throw Error("empty_file", "response file is empty (no header row)");
  }

  // Header.
  const auto& header = rows.front().fields;
  std::unordered_map<std::string, ColumnBinding> expected;
  for (std::size_t i = 0; i < demographics.size(); ++i) {
    expected.emplace(demographics[i],
                     ColumnBinding{ColumnBinding::Kind::demographic, i});
  }
  for (std::size_t i = 0; i < q.questions.size(); ++i) {
    expected.emplace(q.questions[i].id,
                     ColumnBinding{ColumnBinding::Kind::question, i});
  }

  std::vector<std::string> problems;
  if (header.front() != "participant_id") {
    problems.push_back("first column must be participant_id, found \"" +
                       header.front() + "\"");
  }
  std::vector<ColumnBinding> bindings(header.size(),
                                      {ColumnBinding::Kind::demographic, 0});
  std::unordered_set<std::string> found;
  std::vector<std::string> unexpected;
  std::vector<std::string> duplicated;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string& name = header[c];
    if (!found.insert(name).second) {
      duplicated.push_back(name);
      continue;
    }
    auto it = expected.find(name);
    if (it == expected.end()) {
      unexpected.push_back(name);
      continue;
    }
    bindings[c] = it->second;
  }
  std::vector<std::string> missing;
  for (const auto& d : demographics) {
    if (found.count(d) == 0) missing.push_back(d);
  }
  for (const auto& question : q.questions) {
    if (found.count(question.id) == 0) missing.push_back(question.id);
  }
  if (!missing.empty()) problems.push_back("missing column(s): " + join(missing));
  if (!unexpected.empty()) {
    problems.push_back("unexpected column(s): " + join(unexpected));
  }
  if (!duplicated.empty()) {
    problems.push_back("duplicated column(s): " + join(duplicated));
  }
  if (!problems.empty()) {
    std::string msg = "header mismatch on line " +
                      std::to_string(rows.front().line) + ": ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      msg += (i == 0 ? "" : "; ") + problems[i];
    }
    throw Error("header_mismatch", msg);
  }

  // Data rows.
  ResponseSet rs;
  rs.questionnaire_version = q.structure_version;
  rs.demographic_columns.assign(demographics.begin(), demographics.end());
  rs.policy = policy;
  rs.rows_read = rows.size() - 1;
  rs.participants.reserve(rs.rows_read);

  const int top = q.scale.max_code();
  std::unordered_map<std::string, std::size_t> id_lines;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != header.size()) {
      throw Error("malformed_row", at(row.line) + ": expected " +
                                       std::to_string(header.size()) +
                                       " fields, found " +
                                       std::to_string(row.fields.size()));
    }
    ParticipantRecord rec;
    rec.participant_id = std::string(trim(row.fields[0]));
    if (rec.participant_id.empty()) {
      throw Error("empty_participant_id",
                  at(row.line) + ", column participant_id: empty participant id");
    }
    if (auto [it, inserted] = id_lines.emplace(rec.participant_id, row.line);
        !inserted) {
      throw Error("duplicate_participant_id",
                  at(row.line) + ", column participant_id: participant id \"" +
                      rec.participant_id + "\" already used on " +
                      at(it->second));
    }
    rec.answers.assign(q.questions.size(), std::nullopt);
    for (std::size_t c = 1; c < header.size(); ++c) {
      const auto& binding = bindings[c];
      if (binding.kind == ColumnBinding::Kind::demographic) {
        rec.demographics.emplace(demographics[binding.index], row.fields[c]);
        continue;
      }
      const std::string_view cell = trim(row.fields[c]);
      if (cell.empty()) continue;
      int code = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), code);
      if (ec == std::errc::result_out_of_range) {
        code = -1;
      } else if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw Error("invalid_answer",
                    at(row.line) + ", column " + header[c] + ": \"" +
                        std::string(cell) + "\" is not an integer level code");
      }
      if (code < 0 || code > top) {
        throw Error("out_of_range", at(row.line) + ", column " + header[c] +
                                        ": value " + std::string(cell) +
                                        " outside 0.." + std::to_string(top));
      }
      rec.answers[binding.index] = code;
    }

    std::vector<std::string> unanswered;
    for (std::size_t i = 0; i < rec.answers.size(); ++i) {
      if (!rec.answers[i]) unanswered.push_back(q.questions[i].id);
    }
    if (!unanswered.empty()) {
      if (policy == MissingPolicy::exclude_participant) {
        rs.warnings.push_back("participant " + rec.participant_id + " (" +
                              at(row.line) + ") excluded: missing answer(s) for " +
                              join(unanswered));
        continue;
      }
      for (auto& answer : rec.answers) {
        if (!answer) answer = 0;
      }
      rs.warnings.push_back("participant " + rec.participant_id + " (" +
                            at(row.line) + "): missing answer(s) for " +
                            join(unanswered) + " treated as 0");
    }
    rs.participants.push_back(std::move(rec));
  }
  return rs;
}

}  // namespace sure
