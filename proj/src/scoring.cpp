#include "sure/scoring.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace sure {

double sub_goal_score(const ParticipantRecord& p, std::string_view sub_goal_id,
                      const Questionnaire& q) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < q.questions.size(); ++i) {
    if (q.questions[i].sub_goal != sub_goal_id) continue;
    if (i >= p.answers.size() || !p.answers[i]) {
      throw Error("missing_answer", "participant " + p.participant_id +
                                        " has no answer for " +
                                        q.questions[i].id);
    }
    sum += normalize(*p.answers[i], q.scale);
    ++count;
  }
  if (count == 0) {
    throw Error("no_questions", "no question measures sub goal \"" +
                                    std::string(sub_goal_id) + "\"");
  }
  return sum / static_cast<double>(count);
}

double key_goal_score(std::span<const double> sub_scores) {
  if (sub_scores.empty()) {
    throw Error("empty_input", "key goal score needs at least one sub-goal score");
  }
  double all_fail = 1.0;
  double best = 0.0;
  for (double s : sub_scores) {
    all_fail *= 1.0 - s;
    best = std::max(best, s);
  }
  // 1 - (1 - s) can round below s when s < 0.5; the exact value never is.
  return std::max(1.0 - all_fail, best);
}

double participant_score(std::span<const double> key_scores) {
  if (key_scores.empty()) {
    throw Error("empty_input", "participant score needs at least one key-goal score");
  }
  double product = 1.0;
  for (double s : key_scores) product *= s;
  return product;
}

namespace {

// Question indices per sub goal, flattened in structure order.
std::vector<std::vector<std::size_t>> questions_by_sub_goal(
    const Questionnaire& q, const GoalStructure& gs) {
  std::unordered_map<std::string_view, std::size_t> slot;
  std::size_t n = 0;
  for (const auto& kg : gs.key_goals) {
    for (const auto& sg : kg.sub_goals) slot.emplace(sg.id, n++);
  }
  std::vector<std::vector<std::size_t>> plan(n);
  for (std::size_t i = 0; i < q.questions.size(); ++i) {
    plan[slot.at(q.questions[i].sub_goal)].push_back(i);
  }
  return plan;
}

}  // namespace

ScoreResult score_all(const ResponseSet& rs, const Questionnaire& q,
                      const GoalStructure& gs) {
  auto violations = validate_questionnaire(q, gs);
  if (!violations.empty()) {
    throw ValidationError("invalid_questionnaire",
                          "questionnaire does not fit the goal structure",
                          std::move(violations));
  }
  if (rs.questionnaire_version != q.structure_version) {
    throw Error("response_mismatch",
                "responses were read for structure version \"" +
                    rs.questionnaire_version + "\", questionnaire targets \"" +
                    q.structure_version + "\"");
  }
  if (rs.participants.empty()) {
    throw Error("no_data", "no participants left to score");
  }

  const auto plan = questions_by_sub_goal(q, gs);
  const double top = static_cast<double>(q.scale.max_code());
  const std::size_t n_keys = gs.key_goals.size();
  const std::size_t n_subs = plan.size();

  ScoreResult result;
  result.participants.reserve(rs.participants.size());
  std::vector<double> sub_buffer;
  for (const auto& p : rs.participants) {
    if (p.answers.size() != q.questions.size()) {
      throw Error("response_mismatch",
                  "participant " + p.participant_id + " has " +
                      std::to_string(p.answers.size()) + " answers, expected " +
                      std::to_string(q.questions.size()));
    }
    ParticipantScore ps;
    ps.participant_id = p.participant_id;
    ps.sub_goal_scores.reserve(n_subs);
    ps.key_goal_scores.reserve(n_keys);
    for (const auto& questions : plan) {
      double sum = 0.0;
      for (std::size_t qi : questions) {
        const auto& answer = p.answers[qi];
        if (!answer) {
          throw Error("missing_answer", "participant " + p.participant_id +
                                            " has no answer for " +
                                            q.questions[qi].id);
        }
        sum += static_cast<double>(*answer) / top;
      }
      ps.sub_goal_scores.push_back(sum / static_cast<double>(questions.size()));
    }
    std::size_t offset = 0;
    for (const auto& kg : gs.key_goals) {
      const std::span<const double> children(
          ps.sub_goal_scores.data() + offset, kg.sub_goals.size());
      ps.key_goal_scores.push_back(key_goal_score(children));
      offset += kg.sub_goals.size();
    }
    ps.overall = participant_score(ps.key_goal_scores);
    result.participants.push_back(std::move(ps));
  }

  // Sequential sums in participant order.
  AggregateScores& agg = result.aggregates;
  agg.n_participants = result.participants.size();
  agg.key_goal.assign(n_keys, 0.0);
  agg.sub_goal.assign(n_subs, 0.0);
  double overall_sum = 0.0;
  for (const auto& ps : result.participants) {
    overall_sum += ps.overall;
    for (std::size_t k = 0; k < n_keys; ++k) agg.key_goal[k] += ps.key_goal_scores[k];
    for (std::size_t s = 0; s < n_subs; ++s) agg.sub_goal[s] += ps.sub_goal_scores[s];
    if (ps.overall == 1.0) ++agg.n_overall_max;
    if (ps.overall == 0.0) ++agg.n_overall_zero;
  }
  const double n = static_cast<double>(agg.n_participants);
  agg.general = overall_sum / n;
  for (auto& v : agg.key_goal) v /= n;
  for (auto& v : agg.sub_goal) v /= n;
  return result;
}

}  // namespace sure
