#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sure {

// One broken invariant. Validators return these as data.
struct Violation {
  std::string code;
  std::string path;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// "code: path: message"
std::string format_violation(const Violation& v);

// Every failure raised by the library carries a short machine-readable code
// (e.g. "duplicate_id", "out_of_range") next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Raised when an operation is gated on a clean validation result.
class ValidationError : public Error {
 public:
  ValidationError(std::string code, const std::string& context,
                  std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace sure
