#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "support/test_support.hpp"
#include "sure/goal_structure.hpp"

namespace sure {
namespace {

using testing::make_structure;
using testing::pharmacy_structure;

std::vector<std::string> codes(const std::vector<Violation>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.code);
  return out;
}

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "<no error>";
}

TEST(GoalStructure, PharmacyFixtureHasFourKeyGoalsAndTwentySubGoals) {
  const GoalStructure gs = pharmacy_structure();
  ASSERT_EQ(gs.key_goals.size(), 4u);
  EXPECT_EQ(gs.sub_goal_count(), 20u);
  std::vector<std::size_t> sizes;
  for (const auto& kg : gs.key_goals) sizes.push_back(kg.sub_goals.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{5, 6, 4, 5}));
  EXPECT_EQ(gs.key_goals[0].id, "B1");
  EXPECT_EQ(gs.key_goals[0].label, "Lecture quality");
  EXPECT_EQ(gs.key_goals[3].sub_goals[4].id, "A45");
  EXPECT_EQ(gs.key_goals[3].sub_goals[4].label, "Feedback speed and style");
  // Labels may repeat; ids may not.
  EXPECT_EQ(gs.key_goals[1].sub_goals[0].label, "Knowledge");
  EXPECT_EQ(gs.key_goals[1].sub_goals[3].label, "Knowledge");
  EXPECT_TRUE(validate_structure(gs).empty());
  EXPECT_EQ(gs.status, Status::confirmed);
}

TEST(GoalStructure, MinimalDocumentParses) {
  const GoalStructure gs = parse_structure(R"({
    "title": "t", "version": "1", "status": "draft", "confirmation": null,
    "key_goals": [{"id": "B1", "label": "b", "sub_goals": [{"id": "A11", "label": "a"}]}]
  })");
  ASSERT_EQ(gs.key_goals.size(), 1u);
  EXPECT_EQ(gs.sub_goal_count(), 1u);
  EXPECT_FALSE(gs.confirmation.has_value());
}

TEST(GoalStructure, ConfirmationFieldMayBeOmitted) {
  const GoalStructure gs = parse_structure(R"({"title": "t", "version": "1", "status": "draft",
    "key_goals": [{"id": "B1", "label": "b", "sub_goals": [{"id": "A11", "label": "a"}]}]})");
  EXPECT_FALSE(gs.confirmation.has_value());
}

TEST(GoalStructure, KeyGoalWithoutSubGoalsIsRejected) {
  const std::string doc = R"({"title": "t", "version": "1", "status": "draft",
    "confirmation": null, "key_goals": [{"id": "B1", "label": "b", "sub_goals": []}]})";
  try {
    parse_structure(doc);
    FAIL() << "expected an error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), "no_sub_goals");
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].path, "key_goals[0]");
    EXPECT_NE(std::string(e.what()).find("zero sub goals"), std::string::npos);
  }
}

TEST(GoalStructure, EmptyKeyGoalListIsRejected) {
  EXPECT_EQ(error_code([] {
              parse_structure(R"({"title": "t", "version": "1", "status": "draft",
                                 "confirmation": null, "key_goals": []})");
            }),
            "empty_structure");
}

TEST(GoalStructure, StrictModeRejectsUnknownFields) {
  EXPECT_EQ(error_code([] {
              decode_structure(R"({"title": "t", "version": "1", "status": "draft",
                "weights": [1], "key_goals": []})");
            }),
            "unknown_field");
  try {
    decode_structure(R"({"title": "t", "version": "1", "status": "draft", "key_goals": [
      {"id": "B1", "label": "b", "sub_goals": [{"id": "A11", "label": "a", "weight": 2}]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "unknown_field");
    EXPECT_NE(std::string(e.what()).find("key_goals[0].sub_goals[0].weight"), std::string::npos);
  }
}

TEST(GoalStructure, SyntaxErrorReportsPosition) {
  try {
    decode_structure("{\n  \"title\": \"t\",\n  \"version\" \"1\"\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "syntax_error");
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GoalStructure, TypeAndPresenceChecks) {
  EXPECT_EQ(error_code([] { decode_structure(R"({"title": "t"})"); }), "missing_field");
  EXPECT_EQ(error_code([] {
              decode_structure(R"({"title": 3, "version": "1", "status": "draft", "key_goals": []})");
            }),
            "wrong_type");
  EXPECT_EQ(error_code([] {
              decode_structure(R"({"title": "t", "version": "1", "status": "final", "key_goals": []})");
            }),
            "invalid_value");
  EXPECT_EQ(error_code([] { decode_structure("[]"); }), "wrong_type");
}

TEST(GoalStructure, DuplicateIdAcrossKeyGoals) {
  GoalStructure gs = make_structure({2, 2});
  gs.key_goals[1].sub_goals[0].id = gs.key_goals[0].sub_goals[0].id;
  const auto vs = validate_structure(gs);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].code, "duplicate_id");
  EXPECT_EQ(vs[0].path, "key_goals[1].sub_goals[0].id");
}

TEST(GoalStructure, ZeroKeyGoalsIsEmptyStructure) {
  GoalStructure gs = make_structure({});
  EXPECT_EQ(codes(validate_structure(gs)), std::vector<std::string>{"empty_structure"});
}

TEST(GoalStructure, ConfirmedNeedsConfirmationRecord) {
  GoalStructure gs = make_structure({1});
  gs.confirmation.reset();
  EXPECT_EQ(codes(validate_structure(gs)), std::vector<std::string>{"missing_confirmation"});
  gs.confirmation = Confirmation{{}, "2020"};
  EXPECT_EQ(codes(validate_structure(gs)), std::vector<std::string>{"empty_approvers"});
}

TEST(GoalStructure, ConfirmProducesNewConfirmedValue) {
  GoalStructure draft = pharmacy_structure();
  draft.status = Status::draft;
  draft.confirmation.reset();
  const GoalStructure before = draft;

  const GoalStructure confirmed =
      confirm_structure(draft, {"SURE expert", "course professors"}, "2020-12");
  EXPECT_EQ(confirmed.status, Status::confirmed);
  ASSERT_TRUE(confirmed.confirmation.has_value());
  EXPECT_EQ(confirmed.confirmation->approvers.size(), 2u);
  EXPECT_EQ(confirmed.confirmation->date, "2020-12");
  EXPECT_EQ(draft, before);
  EXPECT_TRUE(validate_structure(confirmed).empty());
}

TEST(GoalStructure, ConfirmRefusesInvalidStructure) {
  GoalStructure gs = make_structure({1, 0}, Status::draft);
  try {
    confirm_structure(gs, {"x"}, "d");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(codes(e.violations()), std::vector<std::string>{"no_sub_goals"});
  }
}

TEST(GoalStructure, ConfirmRequiresApprovers) {
  EXPECT_EQ(error_code([] { confirm_structure(make_structure({2}, Status::draft), {}, "d"); }),
            "empty_approvers");
}

TEST(GoalStructure, LookupHelpers) {
  const GoalStructure gs = pharmacy_structure();
  ASSERT_NE(gs.find_key_goal("B3"), nullptr);
  EXPECT_EQ(gs.find_key_goal("B9"), nullptr);
  ASSERT_NE(gs.parent_of("A26"), nullptr);
  EXPECT_EQ(gs.parent_of("A26")->id, "B2");
  EXPECT_EQ(gs.parent_of("B2"), nullptr);
}

// Property: serialize then parse reproduces any valid structure.
TEST(GoalStructureProperty, SerializeParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> shape;
    const int keys = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < keys; ++k) shape.push_back(1 + static_cast<int>(rng() % 6));
    GoalStructure gs = make_structure(shape, rng() % 2 ? Status::confirmed : Status::draft);
    gs.title = "t\"itle " + std::to_string(trial);
    gs.key_goals[0].label = "unicode é | pipe";
    EXPECT_EQ(parse_structure(serialize_structure(gs)), gs);
  }
}

// Property: breaking exactly one invariant yields exactly that violation, and
// confirmation is refused.
TEST(GoalStructureProperty, EachBrokenInvariantIsReported) {
  using Breaker = std::pair<std::string, std::function<void(GoalStructure&, std::mt19937_64&)>>;
  const std::vector<Breaker> breakers = {
      {"empty_structure", [](GoalStructure& g, std::mt19937_64&) { g.key_goals.clear(); }},
      {"no_sub_goals",
       [](GoalStructure& g, std::mt19937_64& r) {
         g.key_goals[r() % g.key_goals.size()].sub_goals.clear();
       }},
      {"empty_id",
       [](GoalStructure& g, std::mt19937_64& r) {
         auto& kg = g.key_goals[r() % g.key_goals.size()];
         kg.sub_goals[r() % kg.sub_goals.size()].id.clear();
       }},
      {"duplicate_id",
       [](GoalStructure& g, std::mt19937_64& r) {
         auto& kg = g.key_goals[r() % g.key_goals.size()];
         kg.sub_goals.push_back(kg.sub_goals.front());
       }},
      {"missing_confirmation",
       [](GoalStructure& g, std::mt19937_64&) {
         g.status = Status::confirmed;
         g.confirmation.reset();
       }},
  };

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> shape;
    const int keys = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < keys; ++k) shape.push_back(1 + static_cast<int>(rng() % 6));
    const GoalStructure good = make_structure(shape, Status::draft);
    ASSERT_TRUE(validate_structure(good).empty());
    EXPECT_NO_THROW(confirm_structure(good, {"a"}, "d"));

    for (const auto& [code, brk] : breakers) {
      GoalStructure bad = good;
      brk(bad, rng);
      const auto vs = validate_structure(bad);
      EXPECT_EQ(codes(vs), std::vector<std::string>{code}) << "trial " << trial;
      EXPECT_THROW(confirm_structure(bad, {"a"}, "d"), ValidationError);
    }
  }
}

}  // namespace
}  // namespace sure
