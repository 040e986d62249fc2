#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sure/cli.hpp"
#include "sure/goal_structure.hpp"
#include "sure/ingest.hpp"
#include "sure/questionnaire.hpp"
#include "sure/report.hpp"
#include "sure/scoring.hpp"
#include "sure/simulate.hpp"

namespace py = pybind11;
using namespace sure;

PYBIND11_MODULE(_core, m) {
  m.doc() = "SURE evaluation engine (C++ core)";

  // SureError(ValueError) with .code and .violations attributes.
  static py::exception<Error> sure_error(m, "SureError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(sure_error.ptr());
      py::object inst = type(e.what());
      inst.attr("code") = e.code();
      py::list violations;
      if (const auto* ve = dynamic_cast<const ValidationError*>(&e)) {
        for (const auto& v : ve->violations()) violations.append(py::cast(v));
      }
      inst.attr("violations") = violations;
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  py::enum_<Status>(m, "Status")
      .value("draft", Status::draft)
      .value("confirmed", Status::confirmed);
  py::enum_<MissingPolicy>(m, "MissingPolicy")
      .value("exclude_participant", MissingPolicy::exclude_participant)
      .value("treat_as_zero", MissingPolicy::treat_as_zero);
  py::enum_<QuestionnaireFormat>(m, "QuestionnaireFormat")
      .value("markdown", QuestionnaireFormat::markdown)
      .value("csv_header", QuestionnaireFormat::csv_header);
  py::enum_<ReportFormat>(m, "ReportFormat")
      .value("markdown", ReportFormat::markdown)
      .value("json", ReportFormat::json)
      .value("csv", ReportFormat::csv);

  py::class_<Violation>(m, "Violation")
      .def_readonly("code", &Violation::code)
      .def_readonly("path", &Violation::path)
      .def_readonly("message", &Violation::message)
      .def("__repr__", [](const Violation& v) { return format_violation(v); });

  // Goal structure
  py::class_<SubGoal>(m, "SubGoal")
      .def(py::init([](std::string id, std::string label) {
             return SubGoal{std::move(id), std::move(label)};
           }),
           py::arg("id"), py::arg("label"))
      .def_readwrite("id", &SubGoal::id)
      .def_readwrite("label", &SubGoal::label)
      .def(py::self == py::self);
  py::class_<KeyGoal>(m, "KeyGoal")
      .def(py::init([](std::string id, std::string label, std::vector<SubGoal> subs) {
             return KeyGoal{std::move(id), std::move(label), std::move(subs)};
           }),
           py::arg("id"), py::arg("label"), py::arg("sub_goals"))
      .def_readwrite("id", &KeyGoal::id)
      .def_readwrite("label", &KeyGoal::label)
      .def_readwrite("sub_goals", &KeyGoal::sub_goals)
      .def(py::self == py::self);
  py::class_<Confirmation>(m, "Confirmation")
      .def_readonly("approvers", &Confirmation::approvers)
      .def_readonly("date", &Confirmation::date);
  py::class_<GoalStructure>(m, "GoalStructure")
      .def(py::init<>())
      .def_readwrite("title", &GoalStructure::title)
      .def_readwrite("version", &GoalStructure::version)
      .def_readwrite("status", &GoalStructure::status)
      .def_readwrite("confirmation", &GoalStructure::confirmation)
      .def_readwrite("key_goals", &GoalStructure::key_goals)
      .def("sub_goal_count", &GoalStructure::sub_goal_count)
      .def(py::self == py::self);

  m.def("decode_structure", &decode_structure, py::arg("document"));
  m.def("parse_structure", &parse_structure, py::arg("document"));
  m.def("serialize_structure", &serialize_structure, py::arg("structure"));
  m.def("validate_structure", &validate_structure, py::arg("structure"));
  m.def("confirm_structure", &confirm_structure, py::arg("structure"),
        py::arg("approvers"), py::arg("date"));

  // Questionnaire
  py::class_<ScaleLevel>(m, "ScaleLevel")
      .def_readonly("code", &ScaleLevel::code)
      .def_readonly("label", &ScaleLevel::label);
  py::class_<Scale>(m, "Scale")
      .def_readonly("levels", &Scale::levels)
      .def("size", &Scale::size);
  py::class_<Question>(m, "Question")
      .def_readwrite("id", &Question::id)
      .def_readwrite("text", &Question::text)
      .def_readwrite("sub_goal", &Question::sub_goal);
  py::class_<Questionnaire>(m, "Questionnaire")
      .def_readwrite("structure_version", &Questionnaire::structure_version)
      .def_readwrite("status", &Questionnaire::status)
      .def_readwrite("scale", &Questionnaire::scale)
      .def_readwrite("questions", &Questionnaire::questions)
      .def(py::self == py::self);

  m.def("default_scale", &default_scale);
  m.def("generate_template", &generate_template, py::arg("structure"));
  m.def("validate_questionnaire", &validate_questionnaire, py::arg("questionnaire"),
        py::arg("structure"));
  m.def("confirm_questionnaire", &confirm_questionnaire, py::arg("questionnaire"),
        py::arg("structure"));
  m.def(
      "render_questionnaire",
      [](const Questionnaire& q, const GoalStructure& gs, QuestionnaireFormat format,
         const std::vector<std::string>& demographics) {
        return render_questionnaire(q, gs, format, demographics);
      },
      py::arg("questionnaire"), py::arg("structure"), py::arg("format"),
      py::arg("demographics") = std::vector<std::string>{});
  m.def("parse_questionnaire", &parse_questionnaire, py::arg("document"));
  m.def("serialize_questionnaire", &serialize_questionnaire, py::arg("questionnaire"));

  // Ingest
  py::class_<ParticipantRecord>(m, "ParticipantRecord")
      .def_readonly("participant_id", &ParticipantRecord::participant_id)
      .def_readonly("demographics", &ParticipantRecord::demographics)
      .def_readonly("answers", &ParticipantRecord::answers);
  py::class_<ResponseSet>(m, "ResponseSet")
      .def_readonly("questionnaire_version", &ResponseSet::questionnaire_version)
      .def_readonly("demographic_columns", &ResponseSet::demographic_columns)
      .def_readonly("participants", &ResponseSet::participants)
      .def_readonly("policy", &ResponseSet::policy)
      .def_readonly("warnings", &ResponseSet::warnings)
      .def_readonly("rows_read", &ResponseSet::rows_read);

  m.def("normalize", &normalize, py::arg("code"), py::arg("scale"));
  m.def(
      "parse_responses",
      [](const std::string& csv, const Questionnaire& q,
         const std::vector<std::string>& demographics, MissingPolicy policy) {
        return parse_responses(csv, q, demographics, policy);
      },
      py::arg("csv"), py::arg("questionnaire"),
      py::arg("demographics") = std::vector<std::string>{},
      py::arg("policy") = MissingPolicy::exclude_participant);

  // Scoring
  py::class_<ParticipantScore>(m, "ParticipantScore")
      .def_readonly("participant_id", &ParticipantScore::participant_id)
      .def_readonly("sub_goal_scores", &ParticipantScore::sub_goal_scores)
      .def_readonly("key_goal_scores", &ParticipantScore::key_goal_scores)
      .def_readonly("overall", &ParticipantScore::overall);
  py::class_<AggregateScores>(m, "AggregateScores")
      .def_readonly("general", &AggregateScores::general)
      .def_readonly("key_goal", &AggregateScores::key_goal)
      .def_readonly("sub_goal", &AggregateScores::sub_goal)
      .def_readonly("n_participants", &AggregateScores::n_participants)
      .def_readonly("n_overall_max", &AggregateScores::n_overall_max)
      .def_readonly("n_overall_zero", &AggregateScores::n_overall_zero);
  py::class_<ScoreResult>(m, "ScoreResult")
      .def_readonly("participants", &ScoreResult::participants)
      .def_readonly("aggregates", &ScoreResult::aggregates);

  m.def("sub_goal_score", &sub_goal_score, py::arg("participant"),
        py::arg("sub_goal_id"), py::arg("questionnaire"));
  m.def(
      "key_goal_score",
      [](const std::vector<double>& s) { return key_goal_score(s); },
      py::arg("sub_scores"));
  m.def(
      "participant_score",
      [](const std::vector<double>& s) { return participant_score(s); },
      py::arg("key_scores"));
  m.def("score_all", &score_all, py::arg("responses"), py::arg("questionnaire"),
        py::arg("structure"));

  // Report
  py::class_<Participation>(m, "Participation")
      .def_readonly("respondents", &Participation::respondents)
      .def_readonly("enrolled", &Participation::enrolled)
      .def_readonly("rate_percent", &Participation::rate_percent);
  py::class_<ScoreReport>(m, "ScoreReport")
      .def_readonly("title", &ScoreReport::title)
      .def_readonly("version", &ScoreReport::version)
      .def_readonly("generated_at", &ScoreReport::generated_at)
      .def_readonly("aggregates", &ScoreReport::aggregates)
      .def_readonly("participants", &ScoreReport::participants)
      .def_readonly("participation", &ScoreReport::participation)
      .def_readonly("warnings", &ScoreReport::warnings)
      .def(py::self == py::self);

  m.def(
      "build_report",
      [](const ScoreResult& scores, const GoalStructure& gs, const Questionnaire& q,
         const ResponseSet& rs, std::optional<std::pair<std::size_t, std::size_t>> participation,
         std::vector<std::string> group_by, std::string generated_at) {
        ReportOptions options;
        options.participation = participation;
        options.group_by = std::move(group_by);
        options.generated_at = std::move(generated_at);
        return build_report(scores, gs, q, rs, options);
      },
      py::arg("scores"), py::arg("structure"), py::arg("questionnaire"),
      py::arg("responses"), py::arg("participation") = py::none(),
      py::arg("group_by") = std::vector<std::string>{},
      py::arg("generated_at") = std::string(kReproducibleTimestamp));
  m.def("render_report", &render_report, py::arg("report"), py::arg("format"));
  m.def("parse_report_json", &parse_report_json, py::arg("document"));
  m.def("make_participation", &make_participation, py::arg("respondents"),
        py::arg("enrolled"));
  m.def("format_score", &format_score, py::arg("value"));
  m.def("format_percent", &format_percent, py::arg("rate_percent"));

  m.def("simulate_responses", &simulate_responses, py::arg("questionnaire"),
        py::arg("participants"), py::arg("seed"));

  // Returns (exit_code, stdout, stderr).
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"sure"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code =
            cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
