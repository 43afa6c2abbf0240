#pragma once

#include <optional>
#include <string>

#include "vocheck/explore.hpp"

namespace vocheck {

enum class PoMode { Reachable, Inductive };

struct PoVerdict {
  bool holds = false;
  bool refused = false;    // enumeration over bound / truncated graph
  bool wd_error = false;   // predicate undefined at some checked state
  std::string message;
  PoMode mode = PoMode::Reachable;
  std::string universe_id;

  // REACHABLE: violating state + shortest reaching trace.
  std::optional<State> violating_state;
  std::optional<Trace> witness_trace;

  // INDUCTIVE: the violating step (pre-state satisfies invariants and the
  // predicate; firing the event leaves the predicate false).
  std::optional<State> inductive_pre;
  std::string inductive_event;
  Binding inductive_binding;
  std::optional<State> inductive_post;
  bool init_violation = false;
};

// Predicate holds in every reachable state. Evaluation faults in `p` are
// hard well-definedness errors naming the state.
PoVerdict check_reachable(const StateGraph& graph, const Expr& p);

struct InductiveOptions {
  unsigned long long max_enumeration = 1000000;
};

// Event-B style establishment + preservation over every type-correct state
// satisfying the machine invariants and `p`. The reported witness is the
// first violation in canonical state order.
PoVerdict check_inductive(const Project& project, const Machine& machine, const Env& env,
                          const Expr& p, const InductiveOptions& options = {});

// One REACHABLE verdict per labeled invariant, declaration order.
struct InvariantVerdict {
  std::string label;
  PoVerdict verdict;
};
std::vector<InvariantVerdict> check_machine_invariants(const Machine& machine,
                                                       const StateGraph& graph);

}  // namespace vocheck
