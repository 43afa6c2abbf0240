#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vocheck/ast.hpp"
#include "vocheck/diag.hpp"

namespace vocheck {

struct LtlNode;
using LtlPtr = std::shared_ptr<const LtlNode>;

// LTL over alternating state/transition sequences. Atoms:
//   StatePred  {expr}   evaluated at the source state
//   Enabled    e(ev)    some real parameter binding of ev enabled there
//   Executed   ev       the transition taken from there is ev
// Bracket is surface sugar: `[ev] phi` reads as G(Executed(ev) => phi).
struct LtlNode {
  enum class Kind {
    True, False,
    StatePred, Enabled, Executed,
    Not, And, Or, Implies,
    Next, Globally, Finally, Until, Release,
    Bracket,
  };
  Kind kind = Kind::True;
  std::shared_ptr<const Expr> pred;  // StatePred
  std::string event;                 // Enabled / Executed / Bracket
  LtlPtr lhs, rhs;                   // unary ops use lhs

  std::string to_string() const;
};

LtlPtr ltl_true();
LtlPtr ltl_false();
LtlPtr ltl_pred(std::shared_ptr<const Expr> e);
LtlPtr ltl_enabled(std::string event);
LtlPtr ltl_executed(std::string event);
LtlPtr ltl_not(LtlPtr a);
LtlPtr ltl_and(LtlPtr a, LtlPtr b);
LtlPtr ltl_or(LtlPtr a, LtlPtr b);
LtlPtr ltl_implies(LtlPtr a, LtlPtr b);
LtlPtr ltl_next(LtlPtr a);
LtlPtr ltl_globally(LtlPtr a);
LtlPtr ltl_finally(LtlPtr a);
LtlPtr ltl_until(LtlPtr a, LtlPtr b);
LtlPtr ltl_release(LtlPtr a, LtlPtr b);
LtlPtr ltl_bracket(std::string event, LtlPtr body);

// Concrete syntax: atoms `{expr}`, `e(event)`, bare event names; operators
// not/and/or/=>, X G F U R, prefix [event]; parentheses. Returns null and
// appends a position-carrying diagnostic on failure.
LtlPtr parse_ltl(const std::string& text, const SourcePos& where, Diagnostics& diags);

// Negation normal form: brackets desugared, implications eliminated, F/G
// rewritten to U/R, negation pushed to atoms.
LtlPtr normalize(const LtlPtr& f);

// Syntactic equality (after to_string canonicalization).
bool ltl_equal(const LtlPtr& a, const LtlPtr& b);

// Event names referenced by the formula (Enabled/Executed/Bracket).
std::vector<std::string> ltl_events(const LtlPtr& f);
// State predicates referenced by the formula.
std::vector<std::shared_ptr<const Expr>> ltl_preds(const LtlPtr& f);

}  // namespace vocheck
