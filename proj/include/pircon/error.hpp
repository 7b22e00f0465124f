#pragma once

#include <stdexcept>
#include <string>

namespace pircon {

/// Domain error carrying a stable machine-readable code (for example
/// "SpecialityViolated") alongside a human-readable message that names
/// the violated rule and the witnessing elements.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace pircon
