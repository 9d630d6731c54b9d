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
// Shared traversal and issue-building helpers for the finder catalog.

#ifndef SB3LINT_SRC_FINDERS_FINDER_UTIL_HPP
#define SB3LINT_SRC_FINDERS_FINDER_UTIL_HPP

#include <functional>
#include <string>
#include <vector>

#include "sb3lint/finders.hpp"
#include "sb3lint/visitor.hpp"

namespace sb3lint::finderutil {

// Catalog entries are plain functions; this wrapper carries their identity.
class RuleFinder final : public Finder {
 public:
  using CheckFn = void (*)(const Finder&, const AnalysisContext&,
                           std::vector<Issue>&);
  RuleFinder(std::string_view id, IssueCategory category, CheckFn fn)
      : id_(id), category_(category), fn_(fn) {}

  std::string_view id() const override { return id_; }
  IssueCategory category() const override { return category_; }
  void check(const AnalysisContext& context,
             std::vector<Issue>& out) const override {
    fn_(*this, context, out);
  }

 private:
  std::string_view id_;
  IssueCategory category_;
  CheckFn fn_;
};

// One analyzable unit: a script or a procedure body.
struct Unit {
  const ActorDefinition* actor = nullptr;
  const Script* script = nullptr;                 // null for procedures
  const ProcedureDefinition* procedure = nullptr; // null for scripts

  const StatementList& body() const {
    return script != nullptr ? script->body : procedure->body;
  }
  std::string topBlockId() const {
    return script != nullptr ? script->topBlockId : procedure->definitionBlockId;
  }
};

// Scripts and procedures of every actor, honoring --ignore-loose.
std::vector<Unit> units(const AnalysisContext& context);
// Scripts only (still honoring --ignore-loose).
std::vector<Unit> scriptUnits(const AnalysisContext& context);

struct WalkInfo {
  std::vector<const Statement*> ancestors;
  const StatementList* container = nullptr;
  std::size_t index = 0;

  bool insideLoop() const {
    for (const Statement* a : ancestors) {
      if (a->kind == StatementKind::Forever ||
          a->kind == StatementKind::RepeatTimes ||
          a->kind == StatementKind::RepeatUntil)
        return true;
    }
    return false;
  }
};

// Pre-order statement walk with ancestor stack and container position.
void walkStatements(
    const StatementList& list,
    const std::function<void(const Statement&, const WalkInfo&)>& fn);

// Every expression reachable from the statement, each with the nearest
// block id to anchor an issue at.
using AnchoredExpression = sb3lint::AnchoredExpression;

Issue makeIssue(const Finder& finder, const Unit& unit,
                std::vector<std::string> blockIds,
                std::map<std::string, std::string> params = {});

// Issue without a script context (project- or actor-level findings).
Issue makeActorIssue(const Finder& finder, const std::string& actorName,
                     std::vector<std::string> blockIds,
                     std::map<std::string, std::string> params = {});

// True when the last statement of every path through `list` is a stop-all,
// stop-this-script or delete-this-clone (or an if-else whose branches all
// are), i.e. control never falls off the end.
bool endsTerminally(const StatementList& list);

// Same, restricted to stop-all / stop-this-script.
bool endsWithStop(const StatementList& list);

// Does any expression inside `e` observe the environment (key pressed,
// touching, mouse down)?
bool containsSensingReporter(const Expression& e);

// Statement-level literal rendering for hint parameters.
std::string literalDisplay(const Expression& e);

}  // namespace sb3lint::finderutil

#endif  // SB3LINT_SRC_FINDERS_FINDER_UTIL_HPP
