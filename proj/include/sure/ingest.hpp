#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sure/questionnaire.hpp"

namespace sure {

enum class MissingPolicy { exclude_participant, treat_as_zero };

std::string_view to_string(MissingPolicy policy);

// A level code, or nullopt for an unanswered question.
using RawAnswer = std::optional<int>;

struct ParticipantRecord {
  std::string participant_id;
  std::map<std::string, std::string> demographics;
  // Indexed like Questionnaire::questions.
  std::vector<RawAnswer> answers;

  friend bool operator==(const ParticipantRecord&,
                         const ParticipantRecord&) = default;
};

struct ResponseSet {
  std::string questionnaire_version;
  std::vector<std::string> demographic_columns;
  std::vector<ParticipantRecord> participants;
  MissingPolicy policy = MissingPolicy::exclude_participant;
  std::vector<std::string> warnings;
  // Data rows in the file, before the missing policy dropped anyone.
  std::size_t rows_read = 0;

  friend bool operator==(const ResponseSet&, const ResponseSet&) = default;
};

// code / (L - 1). Throws Error("out_of_range").
double normalize(int code, const Scale& scale);

// Parses a response CSV and applies `policy`. Answers are bound to questions
// by header name. Errors: empty_file, header_mismatch, malformed_row,
// empty_participant_id, duplicate_participant_id, invalid_answer,
// out_of_range. Row errors name the file line and the column.
ResponseSet parse_responses(std::string_view csv, const Questionnaire& q,
                            std::span<const std::string> demographics,
                            MissingPolicy policy);

}  // namespace sure
