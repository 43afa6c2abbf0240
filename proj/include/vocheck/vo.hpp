#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vocheck/explore.hpp"
#include "vocheck/ltl_check.hpp"
#include "vocheck/po.hpp"

namespace vocheck {

enum class VoTechnique { PO, LTL, TRACE };

std::string technique_name(VoTechnique t);

// A requirement-linked validation task: requirement id, target machine,
// technique and its parameter payload.
struct VO {
  std::string requirement;
  std::string machine;
  VoTechnique technique = VoTechnique::PO;
  std::string parameters;
  SourcePos origin;
};

struct VoParseResult {
  std::vector<VO> vos;
  Diagnostics diagnostics;  // errors plus lenient-spelling normalization notes
};

// One VO per line: `VO <req> : <machine> / <TECHNIQUE> / <parameters>`.
// `#` starts a comment. The compact spellings `req/machine/TECH: params` and
// `req/machine/TECH/params` are accepted with a normalization note.
VoParseResult parse_vo_file(const std::string& filename, const std::string& text);

enum class VoStatus { Pass, Fail, Error, Refused };
std::string status_name(VoStatus s);

struct VoEvidence {
  enum class Kind { None, Trace, Lasso, ReachWitness, InductiveWitness, Diagnostic };
  Kind kind = Kind::None;
  std::optional<Trace> trace;        // TRACE runs and PO reaching traces
  std::optional<Lasso> lasso;        // LTL counterexamples
  std::optional<State> state;        // violating state
  std::optional<State> post_state;   // inductive post-state
  std::string event;                 // inductive step event
  Binding binding;
  std::string diagnostic;
};

struct UniverseResult {
  std::string universe_id;
  VoStatus status = VoStatus::Pass;
  VoEvidence evidence;
};

struct VOResult {
  VO vo;
  std::string target_machine;  // differs from vo.machine for inherited runs
  bool inherited = false;
  VoStatus status = VoStatus::Pass;  // Pass iff every universe passes
  std::vector<UniverseResult> universes;
  VoEvidence evidence;  // first non-passing universe's evidence
  double wall_time_ms = 0.0;
};

// Shared exploration cache keyed by (machine, universe). Compute-once and
// safe for concurrent readers.
class GraphCache {
 public:
  std::shared_ptr<const StateGraph> get_or_build(const Project& project, const Machine& machine,
                                                 const Universe& universe,
                                                 const ExploreOptions& options);

 private:
  std::mutex mu_;
  std::map<std::pair<std::string, std::string>, std::shared_ptr<const StateGraph>> cache_;
};

struct RunOptions {
  ExploreOptions explore;
  bool inductive_default = false;  // PO parameters without a mode suffix run inductively
  std::string only_requirement;    // empty = all
};

// Executes one VO against its target machine (or an explicit override for
// inherited checks), one sub-verdict per universe.
VOResult run_vo(const Project& project, const VO& vo, GraphCache& cache,
                const RunOptions& options = {}, const std::string& machine_override = "",
                bool inherited = false);

// Runs every selected VO, then re-runs each VO on every machine refining its
// declared target (inherited checks). Primary results first in declaration
// order, then inherited ordered by declaration, refinement depth, machine order.
std::vector<VOResult> run_all(const Project& project, const std::vector<VO>& vos,
                              GraphCache& cache, const RunOptions& options = {});

struct ConflictEntry {
  std::string requirement;
  std::string passed_on;
  std::string failed_on;
  VoEvidence evidence;
  std::vector<std::string> candidates;  // requirements passing on failed_on that
                                        // share state symbols with this one
  std::string category;                 // "contradiction" | "regression-under-refinement"
};

struct ConflictReport {
  std::vector<ConflictEntry> entries;
};

// Flags every requirement passing on a machine but failing on one of its
// refinements; candidate contradictors share variables or events in their
// parameters (heuristic, labeled as such in reports).
ConflictReport conflict_analysis(const std::vector<VOResult>& results, const Project& project);

enum class ReportFormat { Json, Markdown };

struct ReportOptions {
  ReportFormat format = ReportFormat::Json;
  bool include_timing = false;  // off: wall_time_ms reported as 0 so reports
                                // are byte-identical across runs
};

std::string emit_report(const std::string& project_name, const std::vector<VOResult>& results,
                        const ConflictReport& conflicts, const ReportOptions& options = {});

}  // namespace vocheck
