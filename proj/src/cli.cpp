#include "sure/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "sure/goal_structure.hpp"
#include "sure/io.hpp"
#include "sure/scoring.hpp"
#include "sure/simulate.hpp"

namespace sure::cli {

namespace {

void report_error(const Error& e, std::ostream& err) {
  if (const auto* ve = dynamic_cast<const ValidationError*>(&e)) {
    for (const auto& v : ve->violations()) err << format_violation(v) << "\n";
    return;
  }
  err << "error: " << e.code() << ": " << e.what() << "\n";
}

// Runs `body`, mapping exceptions onto exit codes. `classify` decides which
// library error codes count as validation failures rather than input errors.
template <class Body, class Classify>
ExitStatus guarded(std::ostream& err, Body&& body, Classify&& classify) {
  try {
    return body();
  } catch (const Error& e) {
    report_error(e, err);
    return classify(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return ExitStatus::internal_error;
  }
}

ExitStatus input_error(const Error&) { return ExitStatus::input_error; }

// Prefixes library errors raised by `f` with the file they concern.
// Violation lists already carry their own paths and pass through.
template <class F>
auto in_file(const std::filesystem::path& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

GoalStructure load_structure(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return in_file(path, [&] { return parse_structure(text); });
}

// Questionnaire that passes validation against `gs`, else ValidationError.
Questionnaire load_questionnaire(const std::filesystem::path& path,
                                 const GoalStructure& gs) {
  const std::string text = read_file(path);
  Questionnaire q = in_file(path, [&] { return parse_questionnaire(text); });
  auto violations = validate_questionnaire(q, gs);
  if (!violations.empty()) {
    throw ValidationError("invalid_questionnaire",
                          "questionnaire " + path.string() + " is invalid",
                          std::move(violations));
  }
  return q;
}

}  // namespace

ExitStatus cmd_validate(const std::filesystem::path& structure,
                        std::ostream& out, std::ostream& err) {
  return guarded(
      err,
      [&] {
        const std::string text = read_file(structure);
        const GoalStructure gs = in_file(structure, [&] { return decode_structure(text); });
        const auto violations = validate_structure(gs);
        for (const auto& v : violations) err << format_violation(v) << "\n";
        if (!violations.empty()) return ExitStatus::validation_failed;
        out << "ok: " << gs.key_goals.size() << " key goals, "
            << gs.sub_goal_count() << " sub goals, status "
            << to_string(gs.status) << "\n";
        return ExitStatus::success;
      },
      input_error);
}

ExitStatus cmd_template(const std::filesystem::path& structure,
                        const std::filesystem::path& out_path,
                        std::ostream& out, std::ostream& err) {
  return guarded(
      err,
      [&] {
        const GoalStructure gs = load_structure(structure);
        const Questionnaire q = in_file(structure, [&] { return generate_template(gs); });
        write_file_atomic(out_path, serialize_questionnaire(q));
        out << q.questions.size() << " questions\n";
        return ExitStatus::success;
      },
      [](const Error& e) {
        return e.code() == "structure_not_confirmed" ? ExitStatus::validation_failed
                                                     : ExitStatus::input_error;
      });
}

ExitStatus cmd_check(const std::filesystem::path& structure,
                     const std::filesystem::path& questionnaire,
                     std::optional<QuestionnaireFormat> render,
                     const std::vector<std::string>& demographics,
                     std::ostream& out, std::ostream& err) {
  return guarded(
      err,
      [&] {
        const GoalStructure gs = load_structure(structure);
        const std::string text = read_file(questionnaire);
        const Questionnaire q =
            in_file(questionnaire, [&] { return parse_questionnaire(text); });
        const auto violations = validate_questionnaire(q, gs);
        for (const auto& v : violations) err << format_violation(v) << "\n";
        if (!violations.empty()) return ExitStatus::validation_failed;
        if (render) {
          out << render_questionnaire(q, gs, *render, demographics);
        } else {
          out << "ok: " << q.questions.size() << " questions, status "
              << to_string(q.status) << "\n";
        }
        return ExitStatus::success;
      },
      input_error);
}

ExitStatus cmd_score(const ScoreArgs& args, std::ostream& out,
                     std::ostream& err) {
  return guarded(
      err,
      [&] {
        const GoalStructure gs = load_structure(args.structure);
        const Questionnaire q = load_questionnaire(args.questionnaire, gs);
        if (q.status != Status::confirmed) {
          err << "warning: questionnaire " << args.questionnaire.string()
              << " is still a draft\n";
        }
        const std::string csv = read_file(args.responses);
        const ResponseSet rs = in_file(args.responses, [&] {
          return parse_responses(csv, q, args.demographics, args.policy);
        });
        for (const auto& w : rs.warnings) err << "warning: " << w << "\n";

        const ScoreResult scores =
            in_file(args.responses, [&] { return score_all(rs, q, gs); });

        ReportOptions options;
        options.generated_at = args.reproducible ? std::string(kReproducibleTimestamp)
                                                 : utc_timestamp_now();
        options.group_by = args.group_by;
        if (args.enrolled) options.participation = {{rs.rows_read, *args.enrolled}};
        const ScoreReport report = build_report(scores, gs, q, rs, options);
        const std::string text = render_report(report, args.format);

        if (args.out) {
          write_file_atomic(*args.out, text);
        } else {
          out << text;
        }
        return ExitStatus::success;
      },
      [](const Error& e) {
        return e.code() == "no_data" ? ExitStatus::validation_failed
                                     : ExitStatus::input_error;
      });
}

ExitStatus cmd_simulate(const std::filesystem::path& structure,
                        const std::filesystem::path& questionnaire,
                        long long participants, std::uint64_t seed,
                        const std::filesystem::path& out_path,
                        std::ostream& out, std::ostream& err) {
  return guarded(
      err,
      [&] {
        if (participants < 1) {
          throw Error("invalid_argument", "--participants must be at least 1, got " +
                                              std::to_string(participants));
        }
        const GoalStructure gs = load_structure(structure);
        const Questionnaire q = load_questionnaire(questionnaire, gs);
        write_file_atomic(out_path,
                          simulate_responses(q, static_cast<std::size_t>(participants),
                                             seed));
        out << participants << " participants written to " << out_path.string()
            << "\n";
        return ExitStatus::success;
      },
      input_error);
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Structure-oriented (SURE) evaluation toolkit"};
  app.require_subcommand(1);

  std::string structure;
  std::string questionnaire;
  std::string responses;
  std::string out_path;

  auto* validate = app.add_subcommand("validate", "Validate a goal-structure file");
  validate->add_option("structure", structure, "Goal-structure JSON")->required();

  auto* tmpl = app.add_subcommand(
      "template", "Write a questionnaire template for a confirmed structure");
  tmpl->add_option("structure", structure, "Goal-structure JSON")->required();
  tmpl->add_option("out", out_path, "Questionnaire JSON to write")->required();

  std::string render;
  std::vector<std::string> demographics;
  auto* check = app.add_subcommand("check", "Check a questionnaire against a structure");
  check->add_option("structure", structure, "Goal-structure JSON")->required();
  check->add_option("questionnaire", questionnaire, "Questionnaire JSON")->required();
  check->add_option("--render", render, "Print the questionnaire")
      ->check(CLI::IsMember({"markdown", "csv-header"}));
  check->add_option("--demographics", demographics,
                    "Demographic columns for the csv-header render")
      ->delimiter(',');

  ScoreArgs score_args;
  std::string policy = "exclude";
  std::string format = "markdown";
  std::optional<std::size_t> enrolled;
  std::vector<std::string> group_by;
  auto* score = app.add_subcommand("score", "Score a response CSV and render a report");
  score->add_option("structure", structure, "Goal-structure JSON")->required();
  score->add_option("questionnaire", questionnaire, "Questionnaire JSON")->required();
  score->add_option("responses", responses, "Response CSV")->required();
  score->add_option("--policy", policy, "Missing-answer policy")
      ->check(CLI::IsMember({"exclude", "zero"}));
  score->add_option("--demographics", score_args.demographics,
                    "Declared demographic columns")
      ->delimiter(',');
  score->add_option("--enrolled", enrolled, "Enrolled count for the participation rate");
  score->add_option("--group-by", group_by, "Demographic keys to break down by")
      ->delimiter(',');
  score->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"markdown", "json", "csv"}));
  score->add_option("--out", out_path, "Write the report here instead of stdout");
  score->add_flag("--reproducible", score_args.reproducible,
                  "Use a fixed timestamp for byte-identical output");

  long long participants = 0;
  std::uint64_t seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic response CSV");
  simulate->add_option("structure", structure, "Goal-structure JSON")->required();
  simulate->add_option("questionnaire", questionnaire, "Questionnaire JSON")->required();
  simulate->add_option("out", out_path, "Response CSV to write")->required();
  simulate->add_option("--participants", participants, "Number of rows")->required();
  simulate->add_option("--seed", seed, "Generator seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitStatus::input_error);
  }

  ExitStatus status = ExitStatus::internal_error;
  if (*validate) {
    status = cmd_validate(structure, out, err);
  } else if (*tmpl) {
    status = cmd_template(structure, out_path, out, err);
  } else if (*check) {
    std::optional<QuestionnaireFormat> fmt;
    if (render == "markdown") fmt = QuestionnaireFormat::markdown;
    if (render == "csv-header") fmt = QuestionnaireFormat::csv_header;
    status = cmd_check(structure, questionnaire, fmt, demographics, out, err);
  } else if (*score) {
    score_args.structure = structure;
    score_args.questionnaire = questionnaire;
    score_args.responses = responses;
    score_args.policy = policy == "zero" ? MissingPolicy::treat_as_zero
                                         : MissingPolicy::exclude_participant;
    score_args.enrolled = enrolled;
    score_args.group_by = group_by;
    static const std::map<std::string, ReportFormat> formats{
        {"markdown", ReportFormat::markdown},
        {"json", ReportFormat::json},
        {"csv", ReportFormat::csv}};
    score_args.format = formats.at(format);
    if (!out_path.empty()) score_args.out = out_path;
    status = cmd_score(score_args, out, err);
  } else if (*simulate) {
    status = cmd_simulate(structure, questionnaire, participants, seed, out_path,
                          out, err);
  }
  return static_cast<int>(status);
}

}  // namespace sure::cli
