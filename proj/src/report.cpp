#include "sure/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <unordered_set>
#include <utility>

#include "csv.hpp"
#include "json_fields.hpp"
#include "markdown.hpp"

namespace sure {

using detail::index_path;
using detail::join_path;
using detail::json;
using detail::ordered_json;

Participation make_participation(std::size_t respondents,
                                 std::size_t enrolled) {
  if (enrolled == 0) {
    throw Error("invalid_participation", "enrolled count must be positive");
  }
  if (enrolled < respondents) {
    throw Error("invalid_participation",
                "enrolled count " + std::to_string(enrolled) +
                    " is smaller than the " + std::to_string(respondents) +
                    " respondents");
  }
  // Hundredths of a percent, rounded half-up in integer arithmetic.
  const unsigned long long num = 2ULL * 10000ULL * respondents + enrolled;
  const unsigned long long hundredths = num / (2ULL * enrolled);
  return Participation{respondents, enrolled,
                       static_cast<double>(hundredths) / 100.0};
}

std::array<std::size_t, 10> overall_histogram(
    const std::vector<ParticipantScore>& participants) {
  std::array<std::size_t, 10> bins{};
  for (const auto& p : participants) {
    auto bin = static_cast<std::size_t>(std::floor(p.overall * 10.0));
    bins[std::min<std::size_t>(bin, 9)]++;
  }
  return bins;
}

namespace {

std::string two_decimals(long long hundredths) {
  const bool negative = hundredths < 0;
  const long long a = negative ? -hundredths : hundredths;
  std::string frac = std::to_string(a % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (negative ? "-" : "") + std::to_string(a / 100) + "." + frac;
}

}  // namespace

std::string format_score(double value) {
  return two_decimals(static_cast<long long>(std::floor(value * 100.0 + 0.5)));
}

std::string format_percent(double rate_percent) {
  return format_score(rate_percent) + "%";
}

std::string utc_timestamp_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ScoreReport build_report(const ScoreResult& scores, const GoalStructure& gs,
                         const Questionnaire& q, const ResponseSet& rs,
                         const ReportOptions& options) {
  ScoreReport report;
  report.title = gs.title;
  report.version = gs.version;
  report.generated_at = options.generated_at;
  report.goals = gs.key_goals;
  report.aggregates = scores.aggregates;
  report.participants = scores.participants;
  report.warnings = rs.warnings;

  if (options.participation) {
    report.participation = make_participation(options.participation->first,
                                              options.participation->second);
  }

  if (!options.group_by.empty()) {
    std::vector<GroupBreakdown> breakdowns;
    std::unordered_set<std::string> used;
    for (const auto& key : options.group_by) {
      if (std::find(rs.demographic_columns.begin(), rs.demographic_columns.end(),
                    key) == rs.demographic_columns.end()) {
        throw Error("unknown_group_key",
                    "cannot group by \"" + key +
                        "\": not a declared demographic column");
      }
      if (!used.insert(key).second) {
        throw Error("duplicate_group_key", "group key \"" + key + "\" given twice");
      }
      std::map<std::string, ResponseSet> by_value;
      for (const auto& p : rs.participants) {
        auto it = p.demographics.find(key);
        const std::string value = it == p.demographics.end() ? "" : it->second;
        auto [slot, inserted] = by_value.try_emplace(value);
        if (inserted) {
          slot->second.questionnaire_version = rs.questionnaire_version;
          slot->second.demographic_columns = rs.demographic_columns;
          slot->second.policy = rs.policy;
        }
        slot->second.participants.push_back(p);
        slot->second.rows_read++;
      }
      GroupBreakdown breakdown{key, {}};
      for (const auto& [value, subset] : by_value) {
        breakdown.groups.push_back(
            GroupScores{value, score_all(subset, q, gs).aggregates});
      }
      breakdowns.push_back(std::move(breakdown));
    }
    report.groups = std::move(breakdowns);
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ordered_json keyed_scores(const std::vector<KeyGoal>& goals,
                          const std::vector<double>& key_scores) {
  ordered_json obj = ordered_json::object();
  for (std::size_t k = 0; k < goals.size(); ++k) obj[goals[k].id] = key_scores[k];
  return obj;
}

ordered_json sub_keyed_scores(const std::vector<KeyGoal>& goals,
                              const std::vector<double>& sub_scores) {
  ordered_json obj = ordered_json::object();
  std::size_t s = 0;
  for (const auto& kg : goals) {
    for (const auto& sg : kg.sub_goals) obj[sg.id] = sub_scores[s++];
  }
  return obj;
}

std::string render_json(const ScoreReport& r) {
  ordered_json doc;
  doc["title"] = r.title;
  doc["version"] = r.version;
  doc["generated_at"] = r.generated_at;
  doc["general"] = r.aggregates.general;

  ordered_json keys = ordered_json::array();
  std::size_t s = 0;
  for (std::size_t k = 0; k < r.goals.size(); ++k) {
    const auto& kg = r.goals[k];
    ordered_json subs = ordered_json::array();
    for (const auto& sg : kg.sub_goals) {
      subs.push_back({{"id", sg.id},
                      {"label", sg.label},
                      {"score", r.aggregates.sub_goal[s++]}});
    }
    keys.push_back({{"id", kg.id},
                    {"label", kg.label},
                    {"score", r.aggregates.key_goal[k]},
                    {"sub_goals", std::move(subs)}});
  }
  doc["key_goals"] = std::move(keys);

  ordered_json people = ordered_json::array();
  for (const auto& p : r.participants) {
    people.push_back({{"id", p.participant_id},
                      {"overall", p.overall},
                      {"key_goals", keyed_scores(r.goals, p.key_goal_scores)},
                      {"sub_goals", sub_keyed_scores(r.goals, p.sub_goal_scores)}});
  }
  doc["participants"] = std::move(people);

  const auto bins = overall_histogram(r.participants);
  doc["distribution"] = {{"n", r.aggregates.n_participants},
                         {"n_max", r.aggregates.n_overall_max},
                         {"n_zero", r.aggregates.n_overall_zero},
                         {"histogram", bins}};

  if (r.participation) {
    doc["participation"] = {{"respondents", r.participation->respondents},
                            {"enrolled", r.participation->enrolled},
                            {"rate_percent", r.participation->rate_percent}};
  } else {
    doc["participation"] = nullptr;
  }

  if (r.groups) {
    ordered_json groups = ordered_json::object();
    for (const auto& breakdown : *r.groups) {
      ordered_json entries = ordered_json::array();
      for (const auto& g : breakdown.groups) {
        entries.push_back({{"value", g.value},
                           {"n", g.scores.n_participants},
                           {"n_max", g.scores.n_overall_max},
                           {"n_zero", g.scores.n_overall_zero},
                           {"general", g.scores.general},
                           {"key_goals", keyed_scores(r.goals, g.scores.key_goal)},
                           {"sub_goals", sub_keyed_scores(r.goals, g.scores.sub_goal)}});
      }
      groups[breakdown.key] = std::move(entries);
    }
    doc["groups"] = std::move(groups);
  } else {
    doc["groups"] = nullptr;
  }

  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

std::size_t require_count(const json& obj, std::string_view key,
                          const std::string& path) {
  const auto v = detail::require_integer(obj, key, path);
  if (v < 0) {
    throw Error("invalid_value", join_path(path, key) + ": must not be negative");
  }
  return static_cast<std::size_t>(v);
}

// Reads {id: num} in goal order; the key set must match exactly.
std::vector<double> read_keyed(const json& obj, std::string_view key,
                               const std::vector<std::string>& ids,
                               const std::string& path) {
  const json& m = detail::require_field(obj, key, path);
  const std::string here = join_path(path, key);
  detail::expect_object(m, here);
  if (m.size() != ids.size()) {
    throw Error("inconsistent_report", here + ": expected " +
                                           std::to_string(ids.size()) +
                                           " entries, found " +
                                           std::to_string(m.size()));
  }
  std::vector<double> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(detail::require_number(m, id, here));
  return out;
}

AggregateScores read_group_scores(const json& g, const std::vector<std::string>& key_ids,
                                  const std::vector<std::string>& sub_ids,
                                  const std::string& path) {
  AggregateScores a;
  a.n_participants = require_count(g, "n", path);
  a.n_overall_max = require_count(g, "n_max", path);
  a.n_overall_zero = require_count(g, "n_zero", path);
  a.general = detail::require_number(g, "general", path);
  a.key_goal = read_keyed(g, "key_goals", key_ids, path);
  a.sub_goal = read_keyed(g, "sub_goals", sub_ids, path);
  return a;
}

}  // namespace

ScoreReport parse_report_json(std::string_view document) {
  const json doc = detail::parse_document(document, "report");
  detail::expect_object(doc, "");
  detail::reject_unknown_fields(
      doc,
      {"title", "version", "generated_at", "general", "key_goals", "participants",
       "distribution", "participation", "groups", "warnings"},
      "");

  ScoreReport r;
  r.title = detail::require_string(doc, "title", "");
  r.version = detail::require_string(doc, "version", "");
  r.generated_at = detail::require_string(doc, "generated_at", "");
  r.aggregates.general = detail::require_number(doc, "general", "");

  std::vector<std::string> key_ids;
  std::vector<std::string> sub_ids;
  const json& keys = detail::require_array(doc, "key_goals", "");
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const std::string kpath = index_path("key_goals", k);
    detail::expect_object(keys[k], kpath);
    detail::reject_unknown_fields(keys[k], {"id", "label", "score", "sub_goals"}, kpath);
    KeyGoal kg;
    kg.id = detail::require_string(keys[k], "id", kpath);
    kg.label = detail::require_string(keys[k], "label", kpath);
    r.aggregates.key_goal.push_back(detail::require_number(keys[k], "score", kpath));
    const json& subs = detail::require_array(keys[k], "sub_goals", kpath);
    for (std::size_t j = 0; j < subs.size(); ++j) {
      const std::string spath = index_path(join_path(kpath, "sub_goals"), j);
      detail::expect_object(subs[j], spath);
      detail::reject_unknown_fields(subs[j], {"id", "label", "score"}, spath);
      SubGoal sg{detail::require_string(subs[j], "id", spath),
                 detail::require_string(subs[j], "label", spath)};
      r.aggregates.sub_goal.push_back(detail::require_number(subs[j], "score", spath));
      sub_ids.push_back(sg.id);
      kg.sub_goals.push_back(std::move(sg));
    }
    key_ids.push_back(kg.id);
    r.goals.push_back(std::move(kg));
  }

  const json& people = detail::require_array(doc, "participants", "");
  for (std::size_t i = 0; i < people.size(); ++i) {
    const std::string path = index_path("participants", i);
    detail::expect_object(people[i], path);
    detail::reject_unknown_fields(people[i], {"id", "overall", "key_goals", "sub_goals"},
                                  path);
    ParticipantScore p;
    p.participant_id = detail::require_string(people[i], "id", path);
    p.overall = detail::require_number(people[i], "overall", path);
    p.key_goal_scores = read_keyed(people[i], "key_goals", key_ids, path);
    p.sub_goal_scores = read_keyed(people[i], "sub_goals", sub_ids, path);
    r.participants.push_back(std::move(p));
  }

  const json& dist = detail::require_field(doc, "distribution", "");
  detail::expect_object(dist, "distribution");
  detail::reject_unknown_fields(dist, {"n", "n_max", "n_zero", "histogram"},
                                "distribution");
  r.aggregates.n_participants = require_count(dist, "n", "distribution");
  r.aggregates.n_overall_max = require_count(dist, "n_max", "distribution");
  r.aggregates.n_overall_zero = require_count(dist, "n_zero", "distribution");
  const json& hist = detail::require_array(dist, "histogram", "distribution");
  const auto expected_bins = overall_histogram(r.participants);
  if (hist.size() != expected_bins.size()) {
    throw Error("inconsistent_report", "distribution.histogram: expected 10 bins");
  }
  for (std::size_t b = 0; b < hist.size(); ++b) {
    if (!hist[b].is_number_unsigned() || hist[b].get<std::size_t>() != expected_bins[b]) {
      throw Error("inconsistent_report",
                  index_path("distribution.histogram", b) +
                      ": does not match the participant scores");
    }
  }

  if (const json& part = detail::require_field(doc, "participation", "");
      !part.is_null()) {
    detail::expect_object(part, "participation");
    detail::reject_unknown_fields(part, {"respondents", "enrolled", "rate_percent"},
                                  "participation");
    r.participation = Participation{
        require_count(part, "respondents", "participation"),
        require_count(part, "enrolled", "participation"),
        detail::require_number(part, "rate_percent", "participation")};
  }

  if (const json& groups = detail::require_field(doc, "groups", "");
      !groups.is_null()) {
    detail::expect_object(groups, "groups");
    std::vector<GroupBreakdown> breakdowns;
    for (const auto& item : groups.items()) {
      const std::string gpath = join_path("groups", item.key());
      if (!item.value().is_array()) {
        throw Error("wrong_type", gpath + ": expected an array");
      }
      GroupBreakdown breakdown{item.key(), {}};
      for (std::size_t i = 0; i < item.value().size(); ++i) {
        const json& g = item.value()[i];
        const std::string path = index_path(gpath, i);
        detail::expect_object(g, path);
        detail::reject_unknown_fields(
            g, {"value", "n", "n_max", "n_zero", "general", "key_goals", "sub_goals"},
            path);
        breakdown.groups.push_back(GroupScores{
            detail::require_string(g, "value", path),
            read_group_scores(g, key_ids, sub_ids, path)});
      }
      breakdowns.push_back(std::move(breakdown));
    }
    r.groups = std::move(breakdowns);
  }

  r.warnings = detail::require_string_array(doc, "warnings", "");
  return r;
}

// ---------------------------------------------------------------------------
// Markdown

namespace {

std::string render_markdown(const ScoreReport& r) {
  const auto& agg = r.aggregates;
  std::string out;
  out += "# SURE evaluation report: " + r.title + "\n\n";
  out += "- Structure version: " + r.version + "\n";
  out += "- Generated at: " + r.generated_at + "\n";
  out += "- Participants scored: " + std::to_string(agg.n_participants) + "\n";

  out += "\n## General evaluation score\n\n";
  out += "| Score |\n|---:|\n| " + format_score(agg.general) + " |\n";

  out += "\n## Key goals\n\n";
  out += "| Key goal | Score | Label |\n|---|---:|---|\n";
  for (std::size_t k = 0; k < r.goals.size(); ++k) {
    out += "| " + detail::md_cell(r.goals[k].id) + " | " +
           format_score(agg.key_goal[k]) + " | " +
           detail::md_cell(r.goals[k].label) + " |\n";
  }

  out += "\n## Sub goals\n";
  double lo = 0.0;
  double hi = 0.0;
  if (!agg.sub_goal.empty()) {
    const auto [mn, mx] = std::minmax_element(agg.sub_goal.begin(), agg.sub_goal.end());
    lo = *mn;
    hi = *mx;
  }
  std::size_t s = 0;
  for (const auto& kg : r.goals) {
    out += "\n### " + detail::md_cell(kg.id) + ": " + detail::md_cell(kg.label) + "\n\n";
    out += "| Sub goal | Score | Label | Note |\n|---|---:|---|---|\n";
    for (const auto& sg : kg.sub_goals) {
      const double v = agg.sub_goal[s++];
      std::string note;
      if (v == lo) note = "lowest";
      if (v == hi) note += note.empty() ? "highest" : ", highest";
      out += "| " + detail::md_cell(sg.id) + " | " + format_score(v) + " | " +
             detail::md_cell(sg.label) + " | " + note + " |\n";
    }
  }

  out += "\n## Distribution\n\n";
  out += "- Participants: " + std::to_string(agg.n_participants) + "\n";
  out += "- Overall score of 1: " + std::to_string(agg.n_overall_max) + "\n";
  out += "- Overall score of 0: " + std::to_string(agg.n_overall_zero) + "\n\n";
  out += "| Overall score | Participants |\n|---|---:|\n";
  const auto bins = overall_histogram(r.participants);
  for (std::size_t b = 0; b < bins.size(); ++b) {
    const std::string lower = "0." + std::to_string(b);
    const std::string upper = b == 9 ? "1.0]" : "0." + std::to_string(b + 1) + ")";
    out += "| [" + lower + ", " + upper + " | " + std::to_string(bins[b]) + " |\n";
  }

  out += "\n## Participation\n\n";
  if (r.participation) {
    out += "- Respondents: " + std::to_string(r.participation->respondents) + "\n";
    out += "- Enrolled: " + std::to_string(r.participation->enrolled) + "\n";
    out += "- Response rate: " + format_percent(r.participation->rate_percent) + "\n";
  } else {
    out += "Not provided.\n";
  }

  out += "\n## Groups\n";
  if (r.groups && !r.groups->empty()) {
    for (const auto& breakdown : *r.groups) {
      out += "\n### " + detail::md_cell(breakdown.key) + "\n\n";
      std::string header = "| Group | n | General |";
      std::string rule = "|---|---:|---:|";
      for (const auto& kg : r.goals) {
        header += " " + detail::md_cell(kg.id) + " |";
        rule += "---:|";
      }
      out += header + "\n" + rule + "\n";
      for (const auto& g : breakdown.groups) {
        out += "| " + detail::md_cell(g.value.empty() ? "(blank)" : g.value) + " | " +
               std::to_string(g.scores.n_participants) + " | " +
               format_score(g.scores.general) + " |";
        for (double v : g.scores.key_goal) out += " " + format_score(v) + " |";
        out += "\n";
      }
    }
  } else {
    out += "\nNot requested.\n";
  }

  out += "\n## Warnings\n\n";
  if (r.warnings.empty()) {
    out += "None.\n";
  } else {
    for (const auto& w : r.warnings) out += "- " + w + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string render_csv(const ScoreReport& r) {
  using detail::csv_field;
  const auto& agg = r.aggregates;
  std::string out;

  out += "# general\n";
  out += "general,n_participants,n_overall_max,n_overall_zero\n";
  out += num(agg.general) + "," + std::to_string(agg.n_participants) + "," +
         std::to_string(agg.n_overall_max) + "," +
         std::to_string(agg.n_overall_zero) + "\n";

  out += "\n# key_goals\nkey_goal_id,label,score\n";
  for (std::size_t k = 0; k < r.goals.size(); ++k) {
    out += csv_field(r.goals[k].id) + "," + csv_field(r.goals[k].label) + "," +
           num(agg.key_goal[k]) + "\n";
  }

  std::string goal_columns;
  for (const auto& kg : r.goals) goal_columns += "," + csv_field(kg.id);
  for (const auto& kg : r.goals) {
    for (const auto& sg : kg.sub_goals) goal_columns += "," + csv_field(sg.id);
  }

  out += "\n# sub_goals\nkey_goal_id,sub_goal_id,label,score\n";
  std::size_t s = 0;
  for (const auto& kg : r.goals) {
    for (const auto& sg : kg.sub_goals) {
      out += csv_field(kg.id) + "," + csv_field(sg.id) + "," + csv_field(sg.label) +
             "," + num(agg.sub_goal[s++]) + "\n";
    }
  }

  out += "\n# participants\nparticipant_id,overall" + goal_columns + "\n";
  for (const auto& p : r.participants) {
    out += csv_field(p.participant_id) + "," + num(p.overall);
    for (double v : p.key_goal_scores) out += "," + num(v);
    for (double v : p.sub_goal_scores) out += "," + num(v);
    out += "\n";
  }

  out += "\n# distribution\nbin,lower,upper,participants\n";
  const auto bins = overall_histogram(r.participants);
  for (std::size_t b = 0; b < bins.size(); ++b) {
    out += std::to_string(b) + "," + num(static_cast<double>(b) / 10.0) + "," +
           num(static_cast<double>(b + 1) / 10.0) + "," + std::to_string(bins[b]) +
           "\n";
  }

  out += "\n# participation\nrespondents,enrolled,rate_percent\n";
  if (r.participation) {
    out += std::to_string(r.participation->respondents) + "," +
           std::to_string(r.participation->enrolled) + "," +
           num(r.participation->rate_percent) + "\n";
  }

  out += "\n# groups\ngroup_key,group_value,n_participants,n_overall_max,"
         "n_overall_zero,general" +
         goal_columns + "\n";
  if (r.groups) {
    for (const auto& breakdown : *r.groups) {
      for (const auto& g : breakdown.groups) {
        out += csv_field(breakdown.key) + "," + csv_field(g.value) + "," +
               std::to_string(g.scores.n_participants) + "," +
               std::to_string(g.scores.n_overall_max) + "," +
               std::to_string(g.scores.n_overall_zero) + "," + num(g.scores.general);
        for (double v : g.scores.key_goal) out += "," + num(v);
        for (double v : g.scores.sub_goal) out += "," + num(v);
        out += "\n";
      }
    }
  }

  out += "\n# warnings\nwarning\n";
  for (const auto& w : r.warnings) out += csv_field(w) + "\n";
  return out;
}

}  // namespace

std::string render_report(const ScoreReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::markdown:
      return render_markdown(report);
    case ReportFormat::json:
      return render_json(report);
    case ReportFormat::csv:
      return render_csv(report);
  }
  return {};
}

}  // namespace sure
