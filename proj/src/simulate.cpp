#include "sure/simulate.hpp"

#include <random>

#include "csv.hpp"
#include "sure/error.hpp"

namespace sure {

std::string simulate_responses(const Questionnaire& q, std::size_t participants,
                               std::uint64_t seed) {
  if (participants == 0) {
    throw Error("invalid_argument", "participant count must be at least 1");
  }
  const auto levels = static_cast<std::uint64_t>(q.scale.size());
  if (levels < 2) {
    throw Error("invalid_scale", "scale needs at least 2 levels");
  }

  const std::size_t width = std::to_string(participants).size();
  std::mt19937_64 engine(seed);

  std::string out = "participant_id";
  for (const auto& question : q.questions) out += "," + detail::csv_field(question.id);
  out += "\n";
  for (std::size_t row = 1; row <= participants; ++row) {
    std::string id = std::to_string(row);
    id.insert(0, width - id.size(), '0');
    out += "P" + id;
    for (std::size_t i = 0; i < q.questions.size(); ++i) {
      out += "," + std::to_string(engine() % levels);
    }
    out += "\n";
  }
  return out;
}

}  // namespace sure
