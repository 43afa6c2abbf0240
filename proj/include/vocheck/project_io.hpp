#pragma once

#include <string>
#include <vector>

#include "vocheck/views.hpp"
#include "vocheck/vo.hpp"

namespace vocheck {

// A project directory loaded end to end: models parsed and resolved, views
// applied (derived machines registered), VOs collected. Layout convention:
// models/*.ebs, vos/*.vo, views/*.view, discovered recursively in sorted order.
struct LoadedProject {
  std::string root;
  std::string name;  // directory basename
  Project project;
  std::vector<VO> vos;
  std::vector<ViewSpec> views;
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

LoadedProject load_project_dir(const std::string& root);

}  // namespace vocheck
