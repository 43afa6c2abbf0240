#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vocheck/ast.hpp"
#include "vocheck/diag.hpp"

namespace vocheck {

struct ParseResult {
  std::optional<Project> project;
  Diagnostics diagnostics;

  bool ok() const { return project.has_value() && !has_errors(diagnostics); }
};

// Parses and resolves a whole project from (filename, text) pairs, one
// context or machine per file. On syntax or resolution failure the project
// is absent; model-level problems (e.g. a machine without init) are reported
// as diagnostics alongside the resolved project.
ParseResult parse_project(const std::vector<std::pair<std::string, std::string>>& sources);

// Re-runs name resolution and flattening after project surgery
// (view registration). Returns diagnostics; project is valid iff none are errors.
Diagnostics resolve_project(Project& project);

// Parses a single expression (for VO parameters, LTL state predicates,
// view bindings). `where` seeds positions for error messages.
ExprPtr parse_expression(const std::string& text, const SourcePos& where, Diagnostics& diags);

// Parses a semantic type written in surface syntax (BOOL, lo..hi, SetName,
// T --> T, T +-> T).
std::optional<SemanticType> parse_type_text(const std::string& text, const SourcePos& where,
                                            Diagnostics& diags);

}  // namespace vocheck
