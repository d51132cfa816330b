#pragma once

#include <stdexcept>
#include <string>

namespace eucdom {

/// Malformed text input (profile or embedding file). Carries the 1-based
/// line number the problem was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Sizes of two arguments do not fit together (axis vs profile, vector vs system).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace eucdom
