#pragma once

#include <string>
#include <vector>

namespace vocheck {

struct SourcePos {
  std::string file;
  int line = 0;  // 1-based, 0 = unknown
  int col = 0;
};

enum class Severity { Error, Warning, Note };

// One parser/typechecker/runtime finding. machine/event/label locate the
// construct inside the model, independent of the file position.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourcePos pos;
  std::string machine;
  std::string event;
  std::string label;

  std::string render() const;
};

using Diagnostics = std::vector<Diagnostic>;

bool has_errors(const Diagnostics& ds);
std::string render_all(const Diagnostics& ds);

inline Diagnostic error_at(SourcePos pos, std::string msg) {
  return Diagnostic{Severity::Error, std::move(msg), std::move(pos), "", "", ""};
}

}  // namespace vocheck
