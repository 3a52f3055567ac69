#pragma once

#include <stdexcept>
#include <string>

namespace ktsim {

/// A node program did something the model forbids (send along a non-edge,
/// self-message, too many ID fields). Aborts the run.
class ProgramError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An ID field carried a value outside the assignment's range.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A program emitted an ID it never knew or received.
class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph / palette / config text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a correctness oracle; `violation` names the first problem found.
struct Verdict {
  bool valid = true;
  std::string violation;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return valid; }
};

}  // namespace ktsim
