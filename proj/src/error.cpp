#include "sure/error.hpp"

#include <utility>

namespace sure {

std::string format_violation(const Violation& v) {
  return v.code + ": " + v.path + ": " + v.message;
}

Error::Error(std::string code, const std::string& message)
    : std::runtime_error(message), code_(std::move(code)) {}

namespace {

std::string summarize(const std::string& context,
                      const std::vector<Violation>& violations) {
  std::string msg = context + " (" + std::to_string(violations.size()) +
                    " violation" + (violations.size() == 1 ? "" : "s") + ")";
  for (const auto& v : violations) {
    msg += "\n  " + format_violation(v);
  }
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::string code, const std::string& context,
                                 std::vector<Violation> violations)
    : Error(std::move(code), summarize(context, violations)),
      violations_(std::move(violations)) {}

}  // namespace sure
