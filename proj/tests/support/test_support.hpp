#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sure/goal_structure.hpp"
#include "sure/io.hpp"
#include "sure/questionnaire.hpp"

namespace sure::testing {

inline std::filesystem::path data_dir() { return SURE_DATA_DIR; }
inline std::filesystem::path test_dir() { return SURE_TEST_DIR; }

inline std::string fixture(const std::string& name) {
  return read_file(data_dir() / name);
}

inline GoalStructure pharmacy_structure() {
  return parse_structure(fixture("pharmacy_structure.json"));
}

inline Questionnaire pharmacy_questionnaire() {
  return parse_questionnaire(fixture("pharmacy_questionnaire.json"));
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("sure_test_" + std::to_string(rd()) + "_" + std::to_string(++counter));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const { return path_ / name; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

// Confirmed structure with `subs_per_key[k]` sub goals under key goal k.
inline GoalStructure make_structure(const std::vector<int>& subs_per_key,
                                    Status status = Status::confirmed) {
  GoalStructure gs;
  gs.title = "generated";
  gs.version = "v1";
  gs.status = status;
  if (status == Status::confirmed) gs.confirmation = Confirmation{{"tester"}, "2024-01"};
  for (std::size_t k = 0; k < subs_per_key.size(); ++k) {
    KeyGoal kg{"K" + std::to_string(k + 1), "Key goal " + std::to_string(k + 1), {}};
    for (int s = 0; s < subs_per_key[k]; ++s) {
      kg.sub_goals.push_back({kg.id + "S" + std::to_string(s + 1),
                              "Sub goal " + std::to_string(s + 1)});
    }
    gs.key_goals.push_back(std::move(kg));
  }
  return gs;
}

// A randomly shaped scoring problem with its raw answer matrix.
struct Instance {
  std::vector<int> subs_per_key;
  GoalStructure gs;
  Questionnaire q;
  // Flattened sub-goal index measured by each question.
  std::vector<int> question_sub;
  std::vector<std::string> ids;
  // [participant][question]; -1 marks an unanswered question.
  std::vector<std::vector<int>> answers;
};

struct InstanceShape {
  int max_keys = 5;
  int max_subs = 6;
  int max_participants = 50;
  double missing_rate = 0.0;
  // Probability of appending an extra question for a random sub goal, tried
  // once per sub goal.
  double extra_question_rate = 0.0;
};

inline Instance random_instance(std::mt19937_64& rng, const InstanceShape& shape) {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };

  Instance inst;
  const int n_keys = uniform(1, shape.max_keys);
  for (int k = 0; k < n_keys; ++k) inst.subs_per_key.push_back(uniform(1, shape.max_subs));
  inst.gs = make_structure(inst.subs_per_key);
  inst.q = generate_template(inst.gs);

  std::vector<std::string> sub_ids;
  for (const auto& kg : inst.gs.key_goals) {
    for (const auto& sg : kg.sub_goals) sub_ids.push_back(sg.id);
  }
  int extra = 0;
  for (std::size_t s = 0; s < sub_ids.size(); ++s) {
    if (!chance(shape.extra_question_rate)) continue;
    const auto target = static_cast<std::size_t>(uniform(0, static_cast<int>(sub_ids.size()) - 1));
    const auto pos = static_cast<std::size_t>(uniform(0, static_cast<int>(inst.q.questions.size())));
    inst.q.questions.insert(inst.q.questions.begin() + static_cast<std::ptrdiff_t>(pos),
                            Question{"X" + std::to_string(++extra), "extra", sub_ids[target]});
  }
  for (const auto& question : inst.q.questions) {
    const auto it = std::find(sub_ids.begin(), sub_ids.end(), question.sub_goal);
    inst.question_sub.push_back(static_cast<int>(it - sub_ids.begin()));
  }

  const int n_people = uniform(1, shape.max_participants);
  const int top = inst.q.scale.max_code();
  for (int p = 0; p < n_people; ++p) {
    inst.ids.push_back("R" + std::to_string(p + 1));
    std::vector<int> row;
    for (std::size_t i = 0; i < inst.q.questions.size(); ++i) {
      row.push_back(chance(shape.missing_rate) ? -1 : uniform(0, top));
    }
    inst.answers.push_back(std::move(row));
  }
  return inst;
}

// Response CSV for `inst` with question columns in shuffled order.
inline std::string to_csv(const Instance& inst, std::mt19937_64& rng) {
  std::vector<std::size_t> order(inst.q.questions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::ostringstream out;
  out << "participant_id";
  for (auto i : order) out << "," << inst.q.questions[i].id;
  out << "\n";
  for (std::size_t p = 0; p < inst.answers.size(); ++p) {
    out << inst.ids[p];
    for (auto i : order) {
      out << ",";
      if (inst.answers[p][i] >= 0) out << inst.answers[p][i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sure::testing
