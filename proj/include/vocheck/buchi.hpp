#pragma once

#include <string>
#include <vector>

#include "vocheck/ltl.hpp"

namespace vocheck {

// Atomic proposition of the automaton alphabet. Identity is the canonical
// printed form, so structurally equal predicates share an atom.
struct LtlAtom {
  enum class Kind { StatePred, Enabled, Executed };
  Kind kind = Kind::StatePred;
  std::shared_ptr<const Expr> pred;
  std::string event;
  std::string key;  // canonical identity
};

// Edge-labeled Buchi automaton (degeneralized). Labels are conjunctions of
// literals over atoms: every listed must_true atom holds and every
// must_false atom fails on the letter read.
struct BuchiAutomaton {
  struct Edge {
    int src = 0;
    std::vector<int> must_true;   // atom indices, sorted
    std::vector<int> must_false;  // atom indices, sorted
    int dst = 0;
  };

  std::vector<LtlAtom> atoms;
  int num_states = 0;         // includes the root (state 0, no incoming edges)
  int root = 0;               // unique initial state
  std::vector<Edge> edges;    // deterministic construction order
  std::vector<char> accepting;  // per state

  // Tableau statistics, before degeneralization (root excluded).
  int tableau_nodes = 0;
  int acceptance_sets = 0;  // generalized sets prior to the counter construction

  std::vector<std::vector<int>> out;  // state -> edge indices
  void rebuild_adjacency();
};

// Classic tableau expansion to a generalized automaton, then counter
// degeneralization. Requires `f` in negation normal form.
BuchiAutomaton to_buchi(const LtlPtr& f);

}  // namespace vocheck
