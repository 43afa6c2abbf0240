#pragma once

#include <optional>
#include <string>

#include "vocheck/buchi.hpp"
#include "vocheck/explore.hpp"
#include "vocheck/ltl.hpp"

namespace vocheck {

// Counterexample shape: a finite prefix from an initial state and a
// nonempty cycle repeated forever.
struct Lasso {
  Trace prefix;  // start = initial state
  Trace cycle;   // start = prefix end state; last step returns to it
};

struct LtlVerdict {
  bool holds = false;
  bool refused = false;  // truncated graph: verdict would be unsound
  std::string message;   // refusal or well-definedness diagnostics
  std::optional<Lasso> counterexample;
  std::string universe_id;
};

// Raised when an atom is undefined at a state (well-definedness error).
struct LtlEvalError : std::runtime_error {
  std::string state_key;
  LtlEvalError(const std::string& msg, std::string key)
      : std::runtime_error(msg), state_key(std::move(key)) {}
};

// Decides `f` over every infinite path of the (totalized) graph via
// negation -> Buchi -> product emptiness (nested DFS). Deterministic:
// identical inputs yield identical verdicts and counterexamples.
LtlVerdict check_ltl(const StateGraph& graph, const LtlPtr& f);

// Atom evaluation shared with reports: StatePred at a state, Enabled from
// real outgoing edges, Executed from a transition.
bool eval_atom_at_state(const LtlAtom& atom, const StateGraph& graph, int state);
bool eval_atom_on_letter(const LtlAtom& atom, const StateGraph& graph, int state,
                         const TransitionRec& taken);

}  // namespace vocheck
