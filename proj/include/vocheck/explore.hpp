#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vocheck/semantics.hpp"

namespace vocheck {

// Synthetic self-loop label added to deadlock states so every state has an
// outgoing edge (infinite-path LTL semantics). Never matches a real event.
inline constexpr const char* kDeadlockLoopEvent = "\xE2\x9F\xA8"
                                                  "deadlock\xE2\x9F\xA9";  // ⟨deadlock⟩

struct TransitionRec {
  int src = 0;
  std::string event;
  Binding binding;
  int dst = 0;
  bool synthetic = false;
};

// Explored Kripke structure. Indices are BFS discovery order with
// enabled_events tie-breaking, so two explorations of the same inputs are
// identical structure-for-structure.
struct StateGraph {
  std::string machine_name;
  std::string universe_id = "default";
  Env context_env;  // for evaluating state predicates later

  std::vector<State> states;
  std::vector<TransitionRec> transitions;
  std::vector<int> initial;    // sorted
  std::vector<int> deadlocks;  // sorted; computed over real transitions only
  bool truncated = false;

  std::vector<std::vector<int>> out;  // state -> transition indices, in order

  void rebuild_adjacency();
  bool has_real_out(int state, const std::string& event) const;
};

struct ExploreOptions {
  long long max_states = 100000;
  long long max_depth = -1;  // -1 = unlimited
  bool totalize = true;      // add synthetic deadlock self-loops
};

// Exhaustive BFS exploration of one universe. Throws EvalFault if an action
// faults (with the offending state in the message).
StateGraph explore(const Project& project, const Machine& machine, const Env& env,
                   const ExploreOptions& options = {});

struct DotOptions {
  bool show_bindings = true;
  bool elide_synthetic = false;
};

// Deterministic DOT rendering: byte-identical output for identical graphs.
std::string export_dot(const StateGraph& graph, const DotOptions& options = {});

// Deterministic JSON rendering of the graph (states, transitions, initial,
// deadlocks, truncated, universe).
std::string export_graph_json(const StateGraph& graph);

// A replayable run: start state plus fired steps.
struct Trace {
  State start;
  struct Step {
    std::string event;
    Binding binding;
    State after;
  };
  std::vector<Step> steps;
};

struct TraceRefusal {
  int step_index = 0;  // 0-based index of the first infeasible step
  std::string message;
  std::vector<std::string> enabled_alternatives;  // rendered event(binding) forms
};

struct TraceStepRequest {
  std::string event;
  std::optional<Binding> binding;  // unbound: unique enabled binding required
};

using TraceOutcome = std::variant<Trace, TraceRefusal>;

// Replays an event sequence from the initial state of one universe.
// Unbound parameters are resolved when exactly one enabled binding exists,
// refused as ambiguous otherwise.
TraceOutcome check_trace(const Project& project, const Machine& machine, const Env& env,
                         const std::vector<TraceStepRequest>& steps);

struct DeadlockResult {
  bool refused = false;  // graph truncated: answer would be unsound
  std::string message;
  std::vector<State> deadlocks;
};

DeadlockResult find_deadlocks(const StateGraph& graph);

}  // namespace vocheck
