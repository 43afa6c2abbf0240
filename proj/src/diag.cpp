#include "vocheck/diag.hpp"

#include <sstream>

namespace vocheck {

std::string Diagnostic::render() const {
  std::ostringstream os;
  if (!pos.file.empty()) {
    os << pos.file;
    if (pos.line > 0) {
      os << ":" << pos.line;
      if (pos.col > 0) os << ":" << pos.col;
    }
    os << ": ";
  }
  switch (severity) {
    case Severity::Error: os << "error: "; break;
    case Severity::Warning: os << "warning: "; break;
    case Severity::Note: os << "note: "; break;
  }
  os << message;
  if (!machine.empty()) {
    os << " [" << machine;
    if (!event.empty()) os << "." << event;
    if (!label.empty()) os << " " << label;
    os << "]";
  }
  return os.str();
}

bool has_errors(const Diagnostics& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

std::string render_all(const Diagnostics& ds) {
  std::string out;
  for (const auto& d : ds) {
    out += d.render();
    out += "\n";
  }
  return out;
}

}  // namespace vocheck
