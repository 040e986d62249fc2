#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sure/ingest.hpp"
#include "sure/questionnaire.hpp"
#include "sure/report.hpp"

namespace sure::cli {

enum class ExitStatus : int {
  success = 0,
  validation_failed = 1,
  input_error = 2,
  internal_error = 3,
};

struct ScoreArgs {
  std::filesystem::path structure;
  std::filesystem::path questionnaire;
  std::filesystem::path responses;
  MissingPolicy policy = MissingPolicy::exclude_participant;
  std::vector<std::string> demographics;
  std::optional<std::size_t> enrolled;
  std::vector<std::string> group_by;
  ReportFormat format = ReportFormat::markdown;
  std::optional<std::filesystem::path> out;
  bool reproducible = false;
};

ExitStatus cmd_validate(const std::filesystem::path& structure,
                        std::ostream& out, std::ostream& err);

ExitStatus cmd_template(const std::filesystem::path& structure,
                        const std::filesystem::path& out_path,
                        std::ostream& out, std::ostream& err);

ExitStatus cmd_check(const std::filesystem::path& structure,
                     const std::filesystem::path& questionnaire,
                     std::optional<QuestionnaireFormat> render,
                     const std::vector<std::string>& demographics,
                     std::ostream& out, std::ostream& err);

ExitStatus cmd_score(const ScoreArgs& args, std::ostream& out,
                     std::ostream& err);

ExitStatus cmd_simulate(const std::filesystem::path& structure,
                        const std::filesystem::path& questionnaire,
                        long long participants, std::uint64_t seed,
                        const std::filesystem::path& out_path,
                        std::ostream& out, std::ostream& err);

// Parses argv and dispatches to the commands above. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sure::cli
