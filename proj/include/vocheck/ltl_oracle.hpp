#pragma once

#include <optional>
#include <string>

#include "vocheck/explore.hpp"
#include "vocheck/ltl_check.hpp"
#include "vocheck/ltl.hpp"

namespace vocheck {

// Brute-force reference semantics for small graphs. Enumerates every lasso
// (prefix + cycle, at most `bound` transitions total) and evaluates the
// formula directly on the ultimately periodic path with fixpoint semantics
// for U/R. Shares nothing with the tableau/product pipeline.
struct OracleVerdict {
  bool holds = false;
  bool refused = false;  // graph too large for the configured bound
  std::string message;
  std::optional<Lasso> counterexample;  // first falsifying lasso in enumeration order
};

struct OracleOptions {
  int bound = 12;          // max transitions per enumerated path
  int max_graph_states = 12;
};

OracleVerdict oracle_check(const StateGraph& graph, const LtlPtr& f,
                           const OracleOptions& options = {});

// Exact truth value of `f` on the single ultimately periodic path
// prefix.cycle^omega described by transition index sequences into `graph`.
// Exposed for counterexample auditing.
bool oracle_eval_on_lasso(const StateGraph& graph, const LtlPtr& f,
                          const std::vector<int>& prefix_transitions,
                          const std::vector<int>& cycle_transitions);

// Finds the graph transition indices realizing a Lasso; empty on mismatch.
std::optional<std::pair<std::vector<int>, std::vector<int>>> lasso_to_transitions(
    const StateGraph& graph, const Lasso& lasso);

}  // namespace vocheck
