#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "vocheck/ast.hpp"
#include "vocheck/value.hpp"

namespace vocheck {

// Name -> value bindings. A full evaluation environment is the overlay of
// enum elements + set names + constants (context env) and variables/params.
using Env = std::map<std::string, Value>;

// Raised when evaluation is undefined: partial function applied outside its
// domain, unbound name, or an operand of the wrong kind slipping past the
// typechecker (internal error).
struct EvalFault : std::runtime_error {
  SourcePos pos;
  explicit EvalFault(const std::string& msg, SourcePos p = {})
      : std::runtime_error(msg), pos(std::move(p)) {}
};

// Total, deterministic evaluation; throws EvalFault on undefinedness.
Value eval_expr(const Expr& e, const Env& env);

// Convenience: evaluates and requires a boolean.
bool eval_bool(const Expr& e, const Env& env);

}  // namespace vocheck
