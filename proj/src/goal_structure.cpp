#include "sure/goal_structure.hpp"

#include <unordered_map>
#include <utility>

#include "json_fields.hpp"

namespace sure {

using detail::index_path;
using detail::join_path;
using detail::json;
using detail::ordered_json;

std::string_view to_string(Status status) {
  return status == Status::confirmed ? "confirmed" : "draft";
}

Status parse_status(std::string_view text) {
  if (text == "draft") return Status::draft;
  if (text == "confirmed") return Status::confirmed;
  throw Error("invalid_value",
              "status: must be \"draft\" or \"confirmed\", got \"" +
                  std::string(text) + "\"");
}

std::size_t GoalStructure::sub_goal_count() const {
  std::size_t n = 0;
  for (const auto& kg : key_goals) n += kg.sub_goals.size();
  return n;
}

const KeyGoal* GoalStructure::find_key_goal(std::string_view id) const {
  for (const auto& kg : key_goals) {
    if (kg.id == id) return &kg;
  }
  return nullptr;
}

const KeyGoal* GoalStructure::parent_of(std::string_view sub_goal_id) const {
  for (const auto& kg : key_goals) {
    for (const auto& sg : kg.sub_goals) {
      if (sg.id == sub_goal_id) return &kg;
    }
  }
  return nullptr;
}

GoalStructure decode_structure(std::string_view document) {
  const json doc = detail::parse_document(document, "goal structure");
  detail::expect_object(doc, "");
  detail::reject_unknown_fields(
      doc, {"title", "version", "status", "confirmation", "key_goals"}, "");

  GoalStructure gs;
  gs.title = detail::require_string(doc, "title", "");
  gs.version = detail::require_string(doc, "version", "");
  gs.status = parse_status(detail::require_string(doc, "status", ""));

  if (auto it = doc.find("confirmation"); it != doc.end() && !it->is_null()) {
    detail::expect_object(*it, "confirmation");
    detail::reject_unknown_fields(*it, {"approvers", "date"}, "confirmation");
    Confirmation c;
    c.approvers = detail::require_string_array(*it, "approvers", "confirmation");
    c.date = detail::require_string(*it, "date", "confirmation");
    gs.confirmation = std::move(c);
  }

  const json& keys = detail::require_array(doc, "key_goals", "");
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::string kpath = index_path("key_goals", i);
    const json& k = keys[i];
    detail::expect_object(k, kpath);
    detail::reject_unknown_fields(k, {"id", "label", "sub_goals"}, kpath);
    KeyGoal kg;
    kg.id = detail::require_string(k, "id", kpath);
    kg.label = detail::require_string(k, "label", kpath);
    const json& subs = detail::require_array(k, "sub_goals", kpath);
    for (std::size_t j = 0; j < subs.size(); ++j) {
      const std::string spath = index_path(join_path(kpath, "sub_goals"), j);
      const json& s = subs[j];
      detail::expect_object(s, spath);
      detail::reject_unknown_fields(s, {"id", "label"}, spath);
      kg.sub_goals.push_back(SubGoal{detail::require_string(s, "id", spath),
                                     detail::require_string(s, "label", spath)});
    }
    gs.key_goals.push_back(std::move(kg));
  }
  return gs;
}

GoalStructure parse_structure(std::string_view document) {
  GoalStructure gs = decode_structure(document);
  auto violations = validate_structure(gs);
  if (!violations.empty()) {
    std::string code = violations.front().code;
    throw ValidationError(std::move(code), "invalid goal structure",
                          std::move(violations));
  }
  return gs;
}

std::string serialize_structure(const GoalStructure& gs) {
  ordered_json doc;
  doc["title"] = gs.title;
  doc["version"] = gs.version;
  doc["status"] = to_string(gs.status);
  if (gs.confirmation) {
    doc["confirmation"] = {{"approvers", gs.confirmation->approvers},
                           {"date", gs.confirmation->date}};
  } else {
    doc["confirmation"] = nullptr;
  }
  ordered_json keys = ordered_json::array();
  for (const auto& kg : gs.key_goals) {
    ordered_json subs = ordered_json::array();
    for (const auto& sg : kg.sub_goals) {
      subs.push_back({{"id", sg.id}, {"label", sg.label}});
    }
    keys.push_back({{"id", kg.id}, {"label", kg.label}, {"sub_goals", subs}});
  }
  doc["key_goals"] = std::move(keys);
  return doc.dump(2) + "\n";
}

std::vector<Violation> validate_structure(const GoalStructure& gs) {
  std::vector<Violation> out;
  if (gs.key_goals.empty()) {
    out.push_back({"empty_structure", "key_goals",
                   "structure must define at least one key goal"});
  }

  std::unordered_map<std::string, std::string> seen;  // id -> first path
  auto check_id = [&](const std::string& id, const std::string& path) {
    if (id.empty()) {
      out.push_back({"empty_id", path + ".id", "id must not be empty"});
      return;
    }
    auto [it, inserted] = seen.emplace(id, path);
    if (!inserted) {
      out.push_back({"duplicate_id", path + ".id",
                     "id \"" + id + "\" already used at " + it->second});
    }
  };

  for (std::size_t i = 0; i < gs.key_goals.size(); ++i) {
    const auto& kg = gs.key_goals[i];
    const std::string kpath = index_path("key_goals", i);
    check_id(kg.id, kpath);
    if (kg.sub_goals.empty()) {
      out.push_back({"no_sub_goals", kpath,
                     "key goal \"" + kg.id + "\" has zero sub goals"});
    }
    for (std::size_t j = 0; j < kg.sub_goals.size(); ++j) {
      check_id(kg.sub_goals[j].id,
               index_path(join_path(kpath, "sub_goals"), j));
    }
  }

  if (gs.status == Status::confirmed) {
    if (!gs.confirmation) {
      out.push_back({"missing_confirmation", "confirmation",
                     "a confirmed structure needs a confirmation record"});
    } else if (gs.confirmation->approvers.empty()) {
      out.push_back({"empty_approvers", "confirmation.approvers",
                     "a confirmation needs at least one approver"});
    }
  }
  return out;
}

GoalStructure confirm_structure(const GoalStructure& gs,
                                std::vector<std::string> approvers,
                                std::string date) {
  auto violations = validate_structure(gs);
  if (!violations.empty()) {
    throw ValidationError("invalid_structure",
                          "cannot confirm an invalid goal structure",
                          std::move(violations));
  }
  if (approvers.empty()) {
    throw Error("empty_approvers", "confirmation needs at least one approver");
  }
  GoalStructure confirmed = gs;
  confirmed.status = Status::confirmed;
  confirmed.confirmation = Confirmation{std::move(approvers), std::move(date)};
  return confirmed;
}

}  // namespace sure
