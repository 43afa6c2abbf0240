#pragma once

#include <map>
#include <string>
#include <vector>

#include "vocheck/ast.hpp"
#include "vocheck/eval.hpp"

namespace vocheck {

// A machine state: total binding of the machine's variables.
struct State {
  std::map<std::string, Value> bindings;

  // Injective over states of one machine: variables sorted by name with an
  // unambiguous value serialization.
  std::string canonical_key() const;
  std::string to_string() const { return canonical_key(); }

  bool operator==(const State& o) const { return bindings == o.bindings; }
};

// Ordered event-parameter binding (declaration order).
using Binding = std::vector<std::pair<std::string, Value>>;

std::string binding_to_string(const Binding& b);

// One valuation of the deferred constants the machine actually references.
// `env` is the complete context environment: enum elements, set values,
// valued constants, view-fixed constants and this universe's choices.
struct Universe {
  std::string id;  // "default" when nothing is deferred
  Env env;
};

// Expands the event-extends chain, parent-first (params, guards, actions).
// Throws std::runtime_error on a cycle or a dangling parent.
Event flatten_event(const Project& project, const Machine& machine, const Event& event);

// Environment of everything statically fixed for this machine: enum elements,
// set names, valued constants, view-fixed constants. Deferred constants are absent.
Env base_context_env(const Project& project, const Machine& machine);

// Names of deferred constants the machine's behavior depends on (guards,
// actions, init, invariants), minus view-fixed ones.
std::vector<std::string> referenced_deferred_constants(const Project& project,
                                                       const Machine& machine);

// All universes of the machine: one per type-correct valuation of its
// referenced deferred constants that satisfies every axiom decidable under
// the valuation. `cap` bounds the enumeration (throws std::runtime_error beyond it).
std::vector<Universe> enumerate_universes(const Project& project, const Machine& machine,
                                          unsigned long long cap = 1000000);

// Initial states: deterministic init actions evaluated under `env`.
// Exactly one state per universe with the deterministic-action model.
std::vector<State> init_states(const Machine& machine, const Env& env);

// All (flattened event, parameter binding) pairs enabled in `state`, in
// event declaration order then lexicographic binding order. Guard evaluation
// faults count as false.
std::vector<std::pair<const Event*, Binding>> enabled_events(const Project& project,
                                                             const Machine& machine,
                                                             const State& state, const Env& env);

// Fires an enabled event: all action right-hand sides evaluated in the
// pre-state, then written simultaneously; unassigned variables unchanged.
State fire(const Machine& machine, const State& state, const Event& flat_event,
           const Binding& binding, const Env& env);

}  // namespace vocheck
