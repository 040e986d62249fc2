#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sure/goal_structure.hpp"
#include "sure/ingest.hpp"
#include "sure/questionnaire.hpp"

namespace sure {

// Scores for one participant. The key-goal vector follows structure order;
// the sub-goal vector follows structure order flattened across key goals.
struct ParticipantScore {
  std::string participant_id;
  std::vector<double> sub_goal_scores;
  std::vector<double> key_goal_scores;
  double overall = 0.0;

  friend bool operator==(const ParticipantScore&,
                         const ParticipantScore&) = default;
};

// Means over retained participants, laid out like ParticipantScore.
struct AggregateScores {
  double general = 0.0;
  std::vector<double> key_goal;
  std::vector<double> sub_goal;
  std::size_t n_participants = 0;
  std::size_t n_overall_max = 0;
  std::size_t n_overall_zero = 0;

  friend bool operator==(const AggregateScores&,
                         const AggregateScores&) = default;
};

struct ScoreResult {
  std::vector<ParticipantScore> participants;
  AggregateScores aggregates;
};

// Mean of the normalized answers to the questions measuring `sub_goal_id`.
// Throws Error("no_questions") when none do and Error("missing_answer") when
// one of them is unanswered.
double sub_goal_score(const ParticipantRecord& p, std::string_view sub_goal_id,
                      const Questionnaire& q);

// Parallel rule: 1 - prod(1 - q_j). Throws Error("empty_input").
double key_goal_score(std::span<const double> sub_scores);

// Series rule: prod(Q_i). Throws Error("empty_input").
double participant_score(std::span<const double> key_scores);

// Scores every participant and averages in participant order, so repeated
// runs are bit-identical. Throws ValidationError when `q` does not fit `gs`,
// Error("response_mismatch") when `rs` was not read against `q`, and
// Error("no_data") for an empty response set.
ScoreResult score_all(const ResponseSet& rs, const Questionnaire& q,
                      const GoalStructure& gs);

}  // namespace sure
