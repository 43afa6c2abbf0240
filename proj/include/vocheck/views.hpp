#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vocheck/vo.hpp"

namespace vocheck {

// A template validation task attached to a view recipe: it must hold on
// every scenario instantiated the same way.
struct TemplateVo {
  std::string requirement;
  VoTechnique technique = VoTechnique::PO;
  std::string parameters;
  SourcePos origin;
};

// Scenario view: instantiates deferred constructs of a base machine with
// concrete values. Bindable targets are deferred constants and labeled
// INITIALISATION actions, nothing else.
struct ViewBinding {
  enum class Target { Constant, InitAction };
  Target target = Target::Constant;
  std::string name;   // constant name or init action label
  ExprPtr expr;       // closed expression over context constants
  SourcePos pos;

  ViewBinding clone() const;
};

struct ViewSpec {
  std::string name;
  std::string base_machine;
  std::vector<ViewBinding> bindings;
  std::vector<TemplateVo> template_vos;
  SourcePos pos;

  ViewSpec clone() const;
  // Binding shape: sorted target descriptors; scenarios of one recipe agree on it.
  std::vector<std::string> binding_shape() const;
};

struct ViewParseResult {
  std::vector<ViewSpec> views;
  Diagnostics diagnostics;
};

// `view <name> of <machine> bind <target> := <expr> ... [template VO ...] end`
ViewParseResult parse_view_file(const std::string& filename, const std::string& text);

struct DerivedMachine {
  std::string machine_name;  // registered in the project
  std::string base_machine;
  std::string view_name;
};

// Registers the derived machine in the project (refining the base). The base
// machine is untouched. Rejects bindings of non-deferred constructs, type
// mismatches, axiom violations and name collisions.
std::variant<DerivedMachine, Diagnostics> apply_view(Project& project, const ViewSpec& spec);

struct InclusionVerdict {
  bool holds = false;
  bool refused = false;  // truncation
  std::string message;
  // Shortest event sequence feasible in the derived machine but in no
  // universe of the base machine.
  std::vector<std::pair<std::string, Binding>> distinguishing;
};

// Trace inclusion: every event sequence feasible in the derived machine is
// feasible in some universe of the base machine.
InclusionVerdict check_view_refines_base(const Project& project, const DerivedMachine& derived,
                                         GraphCache& cache, const ExploreOptions& options = {});

struct TemplateRunResult {
  std::string requirement;
  bool vacuous = false;  // no scenarios matched the recipe shape
  VoStatus aggregate = VoStatus::Pass;
  std::vector<VOResult> per_scenario;
};

// Expands each template VO of the recipe over the scenarios (views sharing
// the recipe's base machine and binding shape, already applied to the
// project) and executes them.
std::vector<TemplateRunResult> run_template_vos(const Project& project, const ViewSpec& recipe,
                                                const std::vector<const ViewSpec*>& scenarios,
                                                GraphCache& cache, const RunOptions& options = {});

// Surface rendering of a derived machine (for `view apply` persistence).
std::string render_machine_source(const Project& project, const Machine& machine);

}  // namespace vocheck
