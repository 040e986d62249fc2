#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sure/goal_structure.hpp"
#include "sure/ingest.hpp"
#include "sure/questionnaire.hpp"
#include "sure/scoring.hpp"

namespace sure {

struct Participation {
  std::size_t respondents = 0;
  std::size_t enrolled = 0;
  // respondents / enrolled in percent, rounded half-up to 2 decimals.
  double rate_percent = 0.0;

  friend bool operator==(const Participation&, const Participation&) = default;
};

// Throws Error("invalid_participation") when enrolled is zero or smaller
// than respondents.
Participation make_participation(std::size_t respondents, std::size_t enrolled);

struct GroupScores {
  std::string value;
  AggregateScores scores;

  friend bool operator==(const GroupScores&, const GroupScores&) = default;
};

struct GroupBreakdown {
  std::string key;
  std::vector<GroupScores> groups;  // sorted by value

  friend bool operator==(const GroupBreakdown&, const GroupBreakdown&) = default;
};

struct ScoreReport {
  std::string title;
  std::string version;
  std::string generated_at;
  std::vector<KeyGoal> goals;
  AggregateScores aggregates;
  std::vector<ParticipantScore> participants;
  std::optional<Participation> participation;
  std::optional<std::vector<GroupBreakdown>> groups;
  std::vector<std::string> warnings;

  friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

struct ReportOptions {
  // (respondents, enrolled)
  std::optional<std::pair<std::size_t, std::size_t>> participation;
  std::vector<std::string> group_by;
  std::string generated_at;
};

// Group breakdowns rerun score_all on each group's participants. Throws
// Error("unknown_group_key") for a key that is not a declared demographic.
ScoreReport build_report(const ScoreResult& scores, const GoalStructure& gs,
                         const Questionnaire& q, const ResponseSet& rs,
                         const ReportOptions& options);

enum class ReportFormat { markdown, json, csv };

std::string render_report(const ScoreReport& report, ReportFormat format);

// Inverse of render_report(..., ReportFormat::json).
ScoreReport parse_report_json(std::string_view document);

// Participant counts per tenth of the overall score; 1.0 falls in the last bin.
std::array<std::size_t, 10> overall_histogram(
    const std::vector<ParticipantScore>& participants);

// Half-up to two decimals, e.g. 0.125 -> "0.13", 0.7 -> "0.70".
std::string format_score(double value);

// "51.98%"
std::string format_percent(double rate_percent);

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp_now();

inline constexpr std::string_view kReproducibleTimestamp =
    "1970-01-01T00:00:00Z";

}  // namespace sure
