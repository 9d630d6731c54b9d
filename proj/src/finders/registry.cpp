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

#include <algorithm>
#include <memory>
#include <sstream>

#include "finders/catalog.hpp"
#include "finders/finder_util.hpp"
#include "sb3lint/errors.hpp"
#include "sb3lint/finders.hpp"
#include "sb3lint/opcodes.hpp"

namespace sb3lint {

namespace {

std::vector<std::unique_ptr<Finder>>& ownedRegistry() {
  static std::vector<std::unique_ptr<Finder>> owned = [] {
    std::vector<std::unique_ptr<Finder>> finders;
    auto append = [&](std::vector<std::unique_ptr<Finder>> group) {
      for (auto& f : group) finders.push_back(std::move(f));
    };
    append(catalog::syntaxFinders());
    append(catalog::scratchBugFinders());
    append(catalog::generalBugFinders());
    append(catalog::smellFinders());
    finders.push_back(catalog::clonedCodeFinder());
    std::sort(finders.begin(), finders.end(),
              [](const std::unique_ptr<Finder>& a, const std::unique_ptr<Finder>& b) {
                if (a->category() != b->category())
                  return static_cast<int>(a->category()) < static_cast<int>(b->category());
                return a->id() < b->id();
              });
    return finders;
  }();
  return owned;
}

std::string sortedBlockKey(const Issue& issue) {
  std::vector<std::string> ids = issue.blockIds;
  std::sort(ids.begin(), ids.end());
  std::string key;
  for (const std::string& id : ids) {
    key += id;
    key += '\x1f';
  }
  return key;
}

}  // namespace

const char* categoryName(IssueCategory category) {
  switch (category) {
    case IssueCategory::SYNTAX_ERROR: return "SYNTAX_ERROR";
    case IssueCategory::SCRATCH_BUG: return "SCRATCH_BUG";
    case IssueCategory::GENERAL_BUG: return "GENERAL_BUG";
    case IssueCategory::CODE_SMELL: return "CODE_SMELL";
  }
  return "?";
}

const char* severityName(Severity severity) {
  return severity == Severity::BUG ? "BUG" : "SMELL";
}

Severity severityFor(IssueCategory category) {
  return category == IssueCategory::CODE_SMELL ? Severity::SMELL : Severity::BUG;
}

bool issueLess(const Issue& a, const Issue& b) {
  if (a.category != b.category)
    return static_cast<int>(a.category) < static_cast<int>(b.category);
  if (a.finderId != b.finderId) return a.finderId < b.finderId;
  if (a.actorName != b.actorName) return a.actorName < b.actorName;
  const std::string& blockA = a.blockIds.empty() ? std::string() : a.blockIds[0];
  const std::string& blockB = b.blockIds.empty() ? std::string() : b.blockIds[0];
  if (blockA != blockB) return blockA < blockB;
  return sortedBlockKey(a) < sortedBlockKey(b);
}

const std::vector<const Finder*>& finderRegistry() {
  static const std::vector<const Finder*> view = [] {
    std::vector<const Finder*> finders;
    for (const auto& f : ownedRegistry()) finders.push_back(f.get());
    return finders;
  }();
  return view;
}

const Finder* findFinder(std::string_view id) {
  for (const Finder* f : finderRegistry())
    if (f->id() == id) return f;
  return nullptr;
}

void validateConfig(const FinderConfig& config) {
  for (const std::string& id : config.enabledFinderIds)
    if (findFinder(id) == nullptr)
      throw UsageError("unknown finder id: " + id);
}

std::vector<Issue> check(const Finder& finder, const AnalysisContext& context) {
  std::vector<Issue> out;
  finder.check(context, out);
  for (Issue& issue : out) {
    issue.finderId = std::string(finder.id());
    issue.category = finder.category();
    issue.severity = severityFor(finder.category());
    if (issue.hintKey.empty()) issue.hintKey = issue.finderId;
  }
  return out;
}

RunResult run_all(const Program& program, const AssetInventory& assets,
                  const FinderConfig& config) {
  validateConfig(config);

  ControlFlowGraph cfg = build_cfg(program);
  DataflowResult defined = definitely_defined(cfg, program);
  std::vector<EventStatus> events = reachable_event_edges(program);
  AnalysisContext context{program, assets, config, cfg, defined, events};

  RunResult result;
  for (const Finder* finder : finderRegistry()) {
    if (!config.enabledFinderIds.empty() &&
        config.enabledFinderIds.count(std::string(finder->id())) == 0)
      continue;
    try {
      std::vector<Issue> issues = check(*finder, context);
      result.issues.insert(result.issues.end(),
                           std::make_move_iterator(issues.begin()),
                           std::make_move_iterator(issues.end()));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "finder " << finder->id() << " failed: " << e.what();
      result.diagnostics.push_back(msg.str());
    }
  }

  // Deduplicate on (finder, actor, sorted block ids), then order.
  std::sort(result.issues.begin(), result.issues.end(), issueLess);
  std::vector<Issue> unique;
  std::string lastKey;
  for (Issue& issue : result.issues) {
    std::string key = issue.finderId + '\x1e' + issue.actorName + '\x1e' +
                      sortedBlockKey(issue);
    if (key != lastKey) unique.push_back(std::move(issue));
    lastKey = std::move(key);
  }
  result.issues = std::move(unique);
  return result;
}

namespace finderutil {

std::vector<Unit> units(const AnalysisContext& context) {
  std::vector<Unit> out;
  for (const ActorDefinition* actor : context.program.actors()) {
    for (const Script& script : actor->scripts)
      if (context.scriptVisible(script)) out.push_back({actor, &script, nullptr});
    for (const ProcedureDefinition& proc : actor->procedures)
      out.push_back({actor, nullptr, &proc});
  }
  return out;
}

std::vector<Unit> scriptUnits(const AnalysisContext& context) {
  std::vector<Unit> out;
  for (const ActorDefinition* actor : context.program.actors())
    for (const Script& script : actor->scripts)
      if (context.scriptVisible(script)) out.push_back({actor, &script, nullptr});
  return out;
}

namespace {

void walkListImpl(const StatementList& list, WalkInfo& info,
                  const std::function<void(const Statement&, const WalkInfo&)>& fn) {
  for (std::size_t i = 0; i < list.statements.size(); ++i) {
    const Statement& s = list.statements[i];
    info.container = &list;
    info.index = i;
    fn(s, info);
    info.ancestors.push_back(&s);
    for (const StatementList& sub : s.subStacks) walkListImpl(sub, info, fn);
    info.ancestors.pop_back();
  }
}

}  // namespace

void walkStatements(
    const StatementList& list,
    const std::function<void(const Statement&, const WalkInfo&)>& fn) {
  WalkInfo info;
  walkListImpl(list, info, fn);
}

Issue makeIssue(const Finder& finder, const Unit& unit,
                std::vector<std::string> blockIds,
                std::map<std::string, std::string> params) {
  Issue issue;
  issue.finderId = std::string(finder.id());
  issue.category = finder.category();
  issue.severity = severityFor(finder.category());
  issue.actorName = unit.actor->name;
  issue.scriptTopBlockId = unit.topBlockId();
  issue.blockIds = std::move(blockIds);
  issue.hintKey = issue.finderId;
  issue.hintParams = std::move(params);
  return issue;
}

Issue makeActorIssue(const Finder& finder, const std::string& actorName,
                     std::vector<std::string> blockIds,
                     std::map<std::string, std::string> params) {
  Issue issue;
  issue.finderId = std::string(finder.id());
  issue.category = finder.category();
  issue.severity = severityFor(finder.category());
  issue.actorName = actorName;
  issue.blockIds = std::move(blockIds);
  issue.hintKey = issue.finderId;
  issue.hintParams = std::move(params);
  return issue;
}

bool endsTerminally(const StatementList& list) {
  if (list.statements.empty()) return false;
  const Statement& last = list.statements.back();
  if (ControlFlowGraph::isTerminal(last)) return true;
  if (last.kind == StatementKind::Forever) return true;
  if (last.kind == StatementKind::IfElse && last.subStacks.size() == 2)
    return endsTerminally(last.subStacks[0]) && endsTerminally(last.subStacks[1]);
  return false;
}

bool endsWithStop(const StatementList& list) {
  if (list.statements.empty()) return false;
  const Statement& last = list.statements.back();
  if (last.kind == StatementKind::Stop &&
      (last.stopTarget == StopTarget::ALL ||
       last.stopTarget == StopTarget::THIS_SCRIPT))
    return true;
  if (last.kind == StatementKind::IfElse && last.subStacks.size() == 2)
    return endsWithStop(last.subStacks[0]) && endsWithStop(last.subStacks[1]);
  return false;
}

bool containsSensingReporter(const Expression& e) {
  if (isSensingConditionOpcode(e.opcode)) return true;
  for (const Expression& operand : e.operands)
    if (containsSensingReporter(operand)) return true;
  return false;
}

std::string literalDisplay(const Expression& e) {
  switch (e.kind) {
    case ExpressionKind::NumberLiteral:
      return e.text.empty() ? std::to_string(e.number) : e.text;
    case ExpressionKind::StringLiteral:
      return "'" + e.text + "'";
    case ExpressionKind::BoolLiteral:
      return e.boolValue ? "true" : "false";
    case ExpressionKind::ColorLiteral:
      return e.text;
    default:
      return e.text;
  }
}

}  // namespace finderutil

}  // namespace sb3lint
