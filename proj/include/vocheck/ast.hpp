#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vocheck/diag.hpp"
#include "vocheck/value.hpp"

namespace vocheck {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// Expression AST shared by invariants, guards, actions, axioms, PO bodies
// and LTL state predicates.
struct Expr {
  enum class Op {
    IntLit,
    BoolLit,
    Name,      // variable, constant, enum element, set name or event parameter
    SetLit,    // kids = elements
    MapLit,    // kids = k0,v0,k1,v1,...
    Range,     // kids = lo, hi
    Apply,     // kids = fn, arg
    Override,  // kids = fn, map
    Eq, Ne, Lt, Le, Gt, Ge, In,
    Add, Sub, Mul, Neg,
    And, Or, Not, Implies,
  };

  Op op = Op::IntLit;
  long long int_val = 0;
  bool bool_val = false;
  std::string name;
  std::vector<ExprPtr> kids;
  SourcePos pos;

  ExprPtr clone() const;
  std::string to_string() const;
};

ExprPtr make_name(std::string n, SourcePos pos = {});
ExprPtr make_int(long long v, SourcePos pos = {});
ExprPtr make_bool(bool v, SourcePos pos = {});
ExprPtr make_binary(Expr::Op op, ExprPtr l, ExprPtr r, SourcePos pos = {});
ExprPtr make_unary(Expr::Op op, ExprPtr k, SourcePos pos = {});

struct EnumSetDecl {
  std::string name;
  std::vector<std::string> elements;
  SourcePos pos;
};

struct ConstantDecl {
  std::string name;
  SemanticType type;
  ExprPtr value;  // null = deferred
  SourcePos pos;

  bool deferred() const { return value == nullptr; }
};

struct LabeledExpr {
  std::string label;
  ExprPtr expr;
  SourcePos pos;
};

struct Action {
  std::string label;
  std::string variable;
  ExprPtr rhs;
  SourcePos pos;
};

struct ParamDecl {
  std::string name;
  SemanticType type;
  SourcePos pos;
};

struct Event {
  std::string name;
  std::string extends;  // empty = none; resolved against the refined machine
  std::vector<ParamDecl> params;
  std::vector<LabeledExpr> guards;
  std::vector<Action> actions;
  SourcePos pos;

  Event clone() const;
};

struct Context {
  std::string name;
  std::string extends;
  std::vector<EnumSetDecl> sets;
  std::vector<ConstantDecl> constants;
  std::vector<LabeledExpr> axioms;
  SourcePos pos;
};

struct VariableDecl {
  std::string name;
  SemanticType type;
  SourcePos pos;
};

inline constexpr const char* kInitEventName = "INITIALISATION";

struct Machine {
  std::string name;
  std::string refines;  // empty = none
  std::vector<std::string> sees;
  std::vector<VariableDecl> variables;
  std::vector<LabeledExpr> invariants;
  bool has_init = false;
  Event init;  // name INITIALISATION, no params/guards
  std::vector<Event> events;
  SourcePos pos;

  // Scenario-view provenance. A derived machine fixes some constants and
  // may have rewritten init actions; it behaves like a refinement of its base.
  bool from_view = false;
  std::string view_name;
  std::map<std::string, Value> fixed_constants;

  // Filled by resolve_project: guards/actions/params with the extends chain
  // expanded, parent-first.
  Event flat_init;
  std::vector<Event> flat_events;

  Machine clone_shallow() const;  // clones declarations, not flattened caches
};

struct Project {
  std::vector<Context> contexts;
  std::vector<Machine> machines;

  // Resolved lookup tables (resolve_project).
  EnumTable enums;                                 // set name -> elements
  std::map<std::string, std::pair<std::string, int>> elem_of;  // element -> (set, index)
  std::map<std::string, int> context_index;
  std::map<std::string, int> machine_index;

  const Context* find_context(const std::string& name) const;
  const Machine* find_machine(const std::string& name) const;
  Machine* find_machine_mut(const std::string& name);

  // Contexts visible to a machine: sees closure over context extends,
  // deterministic order, no duplicates.
  std::vector<const Context*> visible_contexts(const Machine& m) const;
  const ConstantDecl* find_constant(const Machine& m, const std::string& name) const;
  const VariableDecl* find_variable(const Machine& m, const std::string& name) const;
  const Event* find_event(const Machine& m, const std::string& name) const;

  // Refinement depth from `ancestor` to `m` following refines links;
  // -1 if unrelated.
  int refinement_distance(const std::string& ancestor, const std::string& m) const;
};

}  // namespace vocheck
