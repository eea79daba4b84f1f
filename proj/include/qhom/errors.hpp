#pragma once
#include <stdexcept>
#include <string>

namespace qhom {

// User-facing computation errors (bad input, inadmissible presentations, ...).
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A hard cap was hit in a place where the caller asked for a definite answer.
struct cap_error : error {
  explicit cap_error(const std::string& msg) : error(msg) {}
};

// Malformed input file.
struct parse_error : error {
  parse_error(const std::string& msg, int line)
      : error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
  int line_no;
};

// Violations of internal mathematical cross-checks.  These indicate a bug in
// the engine itself, never a property of the input, and must never fire.
struct internal_check_error : std::logic_error {
  explicit internal_check_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qhom
