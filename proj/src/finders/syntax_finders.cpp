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
// Syntax-error finders: malformed custom block signatures, dangling
// parameters, and unfilled required slots.

#include <map>
#include <set>

#include "finders/catalog.hpp"
#include "finders/finder_util.hpp"
#include "sb3lint/opcodes.hpp"

namespace sb3lint::catalog {

namespace {

using namespace finderutil;

// Slots whose value must be a color, keyed by owner opcode.
bool isColorSlot(const std::string& opcode, const std::string& slot) {
  if (opcode == "sensing_touchingcolor") return slot == "COLOR";
  if (opcode == "sensing_coloristouchingcolor")
    return slot == "COLOR" || slot == "COLOR2";
  if (opcode == "pen_setPenColorToColor") return slot == "COLOR";
  return false;
}

bool isTouchingObjectSlot(const std::string& opcode, const std::string& slot) {
  return opcode == "sensing_touchingobject" && slot == "TOUCHINGOBJECTMENU";
}

bool isReporterish(const Expression& e) {
  switch (e.kind) {
    case ExpressionKind::Reporter:
    case ExpressionKind::VariableRef:
    case ExpressionKind::ListRef:
    case ExpressionKind::ParameterRef:
    case ExpressionKind::Answer:
    case ExpressionKind::Comparison:
    case ExpressionKind::BoolOp:
      return true;
    default:
      return false;
  }
}

// Walks every (owner opcode, slot name, child expression) triple of the
// statement, including slots of nested reporters.
void forEachSlot(
    const Statement& s,
    const std::function<void(const std::string&, const std::string&,
                             const Expression&, const std::string&)>& fn) {
  struct Recurse {
    const std::function<void(const std::string&, const std::string&,
                             const Expression&, const std::string&)>& fn;
    void expression(const Expression& e, const std::string& anchor) const {
      const std::string& selfAnchor = e.blockId.empty() ? anchor : e.blockId;
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        const std::string slot = i < e.operandNames.size() ? e.operandNames[i] : "";
        fn(e.opcode, slot, e.operands[i], selfAnchor);
        expression(e.operands[i], selfAnchor);
      }
    }
  } walker{fn};
  for (std::size_t i = 0; i < s.inputs.size(); ++i) {
    const std::string slot = i < s.inputNames.size() ? s.inputNames[i] : "";
    fn(s.opcode, slot, s.inputs[i], s.blockId);
    walker.expression(s.inputs[i], s.blockId);
  }
}

void ambiguousCustomBlockSignature(const Finder& self, const AnalysisContext& ctx,
                                   std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    std::map<std::string, std::vector<const ProcedureDefinition*>> byProccode;
    for (const ProcedureDefinition& proc : actor->procedures)
      byProccode[proc.proccode].push_back(&proc);
    for (const auto& [proccode, procs] : byProccode) {
      if (procs.size() < 2) continue;
      std::vector<std::string> blockIds;
      for (const ProcedureDefinition* p : procs)
        blockIds.push_back(p->definitionBlockId);
      Unit unit{actor, nullptr, procs[0]};
      out.push_back(makeIssue(self, unit, blockIds,
                              {{"proccode", proccode},
                               {"count", std::to_string(procs.size())},
                               {"sprite", actor->name}}));
    }
  }
}

void ambiguousParameterName(const Finder& self, const AnalysisContext& ctx,
                            std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const ProcedureDefinition& proc : actor->procedures) {
      std::set<std::string> seen, reported;
      for (const auto& [name, kind] : proc.parameters) {
        if (!seen.insert(name).second && reported.insert(name).second) {
          Unit unit{actor, nullptr, &proc};
          out.push_back(makeIssue(self, unit, {proc.definitionBlockId},
                                  {{"proccode", proc.proccode}, {"param", name}}));
        }
      }
    }
  }
}

void callWithoutDefinition(const Finder& self, const AnalysisContext& ctx,
                           std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::CallProcedure) return;
      for (const ProcedureDefinition& proc : unit.actor->procedures)
        if (proc.proccode == s.proccode) return;
      out.push_back(makeIssue(self, unit, {s.blockId}, {{"proccode", s.proccode}}));
    });
  }
}

void expressionAsTouchingOrColor(const Finder& self, const AnalysisContext& ctx,
                                 std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      forEachSlot(s, [&](const std::string& opcode, const std::string& slot,
                         const Expression& child, const std::string& anchor) {
        if (!isReporterish(child)) return;
        const char* expected = nullptr;
        if (isColorSlot(opcode, slot))
          expected = "color";
        else if (isTouchingObjectSlot(opcode, slot))
          expected = "sprite";
        if (expected == nullptr) return;
        const std::string& where = child.blockId.empty() ? anchor : child.blockId;
        out.push_back(makeIssue(
            self, unit, {where},
            {{"expected", expected},
             {"opcode", child.opcode.empty() ? std::string("variable") : child.opcode}}));
      });
    });
  }
}

void illegalParameterRefactor(const Finder& self, const AnalysisContext& ctx,
                              std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      forEachSlot(s, [&](const std::string& opcode, const std::string& slot,
                         const Expression& child, const std::string& anchor) {
        if (child.kind != ExpressionKind::ParameterRef) return;
        if (child.parameterKind != ParameterKind::STRING_NUMBER) return;
        if (!isBooleanSlot(opcode, slot)) return;
        const std::string& where = child.blockId.empty() ? anchor : child.blockId;
        out.push_back(makeIssue(self, unit, {where}, {{"param", child.text}}));
      });
    });
  }
}

void missingTerminationCondition(const Finder& self, const AnalysisContext& ctx,
                                 std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::RepeatUntil) return;
      const Expression* condition = s.input("CONDITION");
      if (condition != nullptr && condition->kind == ExpressionKind::EmptyBool)
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void missingWaitUntilCondition(const Finder& self, const AnalysisContext& ctx,
                               std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::WaitUntil) return;
      const Expression* condition = s.input("CONDITION");
      if (condition != nullptr && condition->kind == ExpressionKind::EmptyBool)
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void collectParameterRefs(const Expression& e, const std::string& anchor,
                          std::vector<std::pair<const Expression*, std::string>>& out) {
  const std::string& selfAnchor = e.blockId.empty() ? anchor : e.blockId;
  if (e.kind == ExpressionKind::ParameterRef) out.push_back({&e, selfAnchor});
  for (const Expression& operand : e.operands)
    collectParameterRefs(operand, selfAnchor, out);
}

void orphanedParameter(const Finder& self, const AnalysisContext& ctx,
                       std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const ProcedureDefinition& proc : actor->procedures) {
      std::set<std::string> declared;
      for (const auto& [name, kind] : proc.parameters) declared.insert(name);
      Unit unit{actor, nullptr, &proc};
      walkStatements(proc.body, [&](const Statement& s, const WalkInfo&) {
        std::vector<std::pair<const Expression*, std::string>> refs;
        for (const Expression& input : s.inputs)
          collectParameterRefs(input, s.blockId, refs);
        for (const auto& [ref, anchor] : refs) {
          if (declared.count(ref->text) == 0)
            out.push_back(makeIssue(self, unit, {anchor},
                                    {{"param", ref->text},
                                     {"proccode", proc.proccode}}));
        }
      });
    }
  }
}

void parameterOutOfScope(const Finder& self, const AnalysisContext& ctx,
                         std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      std::vector<std::pair<const Expression*, std::string>> refs;
      for (const Expression& input : s.inputs)
        collectParameterRefs(input, s.blockId, refs);
      for (const auto& [ref, anchor] : refs)
        out.push_back(makeIssue(self, unit, {anchor}, {{"param", ref->text}}));
    });
  }
}

}  // namespace

std::vector<std::unique_ptr<Finder>> syntaxFinders() {
  std::vector<std::unique_ptr<Finder>> finders;
  auto add = [&](std::string_view id, RuleFinder::CheckFn fn) {
    finders.push_back(
        std::make_unique<RuleFinder>(id, IssueCategory::SYNTAX_ERROR, fn));
  };
  add("ambiguous_custom_block_signature", ambiguousCustomBlockSignature);
  add("ambiguous_parameter_name", ambiguousParameterName);
  add("call_without_definition", callWithoutDefinition);
  add("expression_as_touching_or_color", expressionAsTouchingOrColor);
  add("illegal_parameter_refactor", illegalParameterRefactor);
  add("missing_termination_condition", missingTerminationCondition);
  add("missing_wait_until_condition", missingWaitUntilCondition);
  add("orphaned_parameter", orphanedParameter);
  add("parameter_out_of_scope", parameterOutOfScope);
  return finders;
}

}  // namespace sb3lint::catalog
