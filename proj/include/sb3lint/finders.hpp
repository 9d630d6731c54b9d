// Copyright 2026 The sb3lint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// The issue-finder framework. Every catalog rule implements the one
// check() contract: a pure function from the analyzed program (plus shared
// CFG/dataflow/asset context) to issues. Finders are stateless; distinct
// finders may run concurrently over the same context.

#ifndef SB3LINT_FINDERS_HPP
#define SB3LINT_FINDERS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sb3lint/ast.hpp"
#include "sb3lint/cfg.hpp"
#include "sb3lint/dataflow.hpp"
#include "sb3lint/issue.hpp"

namespace sb3lint {

struct AnalysisContext {
  const Program& program;
  const AssetInventory& assets;
  const FinderConfig& config;
  const ControlFlowGraph& cfg;
  const DataflowResult& defined;
  const std::vector<EventStatus>& events;

  // With --ignore-loose, hatless scripts are invisible to every finder
  // except code_lying_around.
  bool scriptVisible(const Script& script) const {
    return !config.ignoreLooseBlocks || script.event.kind != EventKind::NEVER;
  }
};

class Finder {
 public:
  virtual ~Finder() = default;
  virtual std::string_view id() const = 0;
  virtual IssueCategory category() const = 0;
  virtual void check(const AnalysisContext& context,
                     std::vector<Issue>& out) const = 0;
};

// All catalog finders in stable report order (by category, then id).
const std::vector<const Finder*>& finderRegistry();
const Finder* findFinder(std::string_view id);

// Throws UsageError when the config enables an unknown finder id.
void validateConfig(const FinderConfig& config);

struct RunResult {
  std::vector<Issue> issues;
  // One entry per finder that threw; those finders contribute no issues,
  // the rest of the run is unaffected.
  std::vector<std::string> diagnostics;
};

// Runs every enabled finder, deduplicates and orders the result.
RunResult run_all(const Program& program, const AssetInventory& assets,
                  const FinderConfig& config);

// Single-finder entry point over a prepared context.
std::vector<Issue> check(const Finder& finder, const AnalysisContext& context);

}  // namespace sb3lint

#endif  // SB3LINT_FINDERS_HPP
