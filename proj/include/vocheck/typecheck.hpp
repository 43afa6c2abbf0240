#pragma once

#include <optional>
#include <string>

#include "vocheck/ast.hpp"
#include "vocheck/diag.hpp"

namespace vocheck {

// Expression sort: the typechecker's view of a value's shape. Enum sorts are
// nominal (per set); Set/Map sorts are structural.
struct Sort {
  enum class Kind { Bool, Int, Enum, Set, Map, Empty };
  Kind kind = Kind::Bool;
  std::string enum_set;
  std::shared_ptr<Sort> elem;       // Set
  std::shared_ptr<Sort> key, val;   // Map

  static Sort boolean();
  static Sort integer();
  static Sort enumeration(std::string set);
  static Sort set_of(Sort elem);
  static Sort map_of(Sort key, Sort val);
  static Sort empty();  // {} literal: compatible with any set or map

  std::string to_string() const;
};

bool sorts_compatible(const Sort& a, const Sort& b);
Sort sort_of_type(const SemanticType& t);

// Name lookup scope for typechecking expressions: a machine plus its visible
// contexts, optionally extended with event parameters.
struct Scope {
  const Project* project = nullptr;
  const Machine* machine = nullptr;
  const Event* event = nullptr;  // enables param lookup

  // Kind of name visible in this scope.
  enum class NameKind { Unknown, Variable, Constant, EnumElem, SetName, Param };
  NameKind kind_of(const std::string& name) const;
  std::optional<SemanticType> type_of(const std::string& name) const;
  std::optional<Sort> sort_of_name(const std::string& name) const;
};

// Whole-project typecheck: every expression well-sorted, every type finite,
// every action sort-preserving, valued constants inside their type, init
// assigns every variable. Empty result = well-typed.
Diagnostics typecheck(const Project& project);

// Checks a single expression against a scope; returns its sort if well-typed.
// Diagnostics are appended, tagged with machine/event/label context.
std::optional<Sort> typecheck_expr(const Expr& e, const Scope& scope, Diagnostics& diags,
                                   const std::string& machine = "", const std::string& event = "",
                                   const std::string& label = "");

}  // namespace vocheck
