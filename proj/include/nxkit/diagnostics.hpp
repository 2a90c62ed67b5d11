#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nxkit {

// Source position of a token or construct. `offset` is the byte offset into
// the input text; `line` and `column` are 1-based.
struct Position {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;

  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

enum class Severity { Note, Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Note;
  Position position;
  std::string message;

  std::string str() const {
    const char* tag = severity == Severity::Error     ? "error"
                      : severity == Severity::Warning ? "warning"
                                                      : "note";
    return std::string(tag) + " at " + position.str() + ": " + message;
  }
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

// Thrown for unrecoverable lexical or syntactic problems.
struct ParseError : std::runtime_error {
  Position position;
  ParseError(Position pos, const std::string& msg)
      : std::runtime_error(pos.str() + ": " + msg), position(pos) {}
};

// Thrown for malformed or unsupported logic specifications.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a semantic operation is applied to unsuitable input
// (foreign connectives, model/problem signature mismatches, ...).
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nxkit
