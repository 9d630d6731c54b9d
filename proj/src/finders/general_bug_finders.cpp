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
// Bug patterns that exist in any language: dead code after terminating
// branches, broken message/clone wiring, literal comparisons, missing
// initialization, unbounded recursion.

#include <set>

#include "finders/catalog.hpp"
#include "finders/finder_util.hpp"
#include "sb3lint/equality.hpp"
#include "sb3lint/opcodes.hpp"

namespace sb3lint::catalog {

namespace {

using namespace finderutil;

struct MessageId {
  std::string id;
  std::string name;
};

MessageId broadcastMessage(const Statement& s) {
  MessageId msg;
  if (const Expression* input = s.input("BROADCAST_INPUT")) {
    if (input->kind == ExpressionKind::BroadcastRef) {
      msg.id = input->refId;
      msg.name = input->text;
    } else if (input->kind == ExpressionKind::StringLiteral) {
      msg.name = input->text;
    }
  }
  return msg;
}

bool sameMessage(const MessageId& a, const std::string& id, const std::string& name) {
  if (!a.id.empty() && !id.empty()) return a.id == id;
  return a.name == name;
}

bool isBroadcastKind(const Statement& s) {
  return s.kind == StatementKind::Broadcast ||
         s.kind == StatementKind::BroadcastAndWait;
}

void blockingIfElse(const Finder& self, const AnalysisContext& ctx,
                    std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::IfElse || s.subStacks.size() != 2) return;
      if (!endsTerminally(s.subStacks[0]) || !endsTerminally(s.subStacks[1]))
        return;
      if (info.index + 1 < info.container->statements.size())
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void comparingLiterals(const Finder& self, const AnalysisContext& ctx,
                       std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      for (const AnchoredExpression& ae : anchoredExpressions(s)) {
        const Expression& e = *ae.expression;
        if (e.kind != ExpressionKind::Comparison || e.operands.size() != 2)
          continue;
        if (e.operands[0].isLiteral() && e.operands[1].isLiteral()) {
          out.push_back(makeIssue(self, unit, {ae.anchorBlockId},
                                  {{"left", literalDisplay(e.operands[0])},
                                   {"right", literalDisplay(e.operands[1])}}));
        }
      }
    });
  }
}

// Calls with statements after them, to custom blocks that never return.
void callsWithSuccessors(const Finder& self, const AnalysisContext& ctx,
                         std::vector<Issue>& out,
                         bool (*bodyNeverReturns)(const StatementList&)) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::CallProcedure) return;
      if (info.index + 1 >= info.container->statements.size()) return;
      for (const ProcedureDefinition& proc : unit.actor->procedures) {
        if (proc.proccode != s.proccode) continue;
        if (bodyNeverReturns(proc.body)) {
          out.push_back(
              makeIssue(self, unit, {s.blockId}, {{"proccode", s.proccode}}));
          return;
        }
      }
    });
  }
}

bool bodyEndsInForever(const StatementList& body) {
  return !body.statements.empty() &&
         body.statements.back().kind == StatementKind::Forever;
}

void customBlockWithForever(const Finder& self, const AnalysisContext& ctx,
                            std::vector<Issue>& out) {
  callsWithSuccessors(self, ctx, out, bodyEndsInForever);
}

void customBlockWithTermination(const Finder& self, const AnalysisContext& ctx,
                                std::vector<Issue>& out) {
  callsWithSuccessors(self, ctx, out, endsWithStop);
}

void deleteCloneAfterBroadcast(const Finder& self, const AnalysisContext& ctx,
                               std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::Broadcast) return;
      const auto& stmts = info.container->statements;
      if (info.index + 1 >= stmts.size()) return;
      const Statement& next = stmts[info.index + 1];
      if (next.kind == StatementKind::DeleteThisClone)
        out.push_back(makeIssue(self, unit, {s.blockId, next.blockId},
                                {{"message", broadcastMessage(s).name}}));
    });
  }
}

void endlessRecursion(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  // Custom block unconditionally calling itself.
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const ProcedureDefinition& proc : actor->procedures) {
      for (const Statement& s : proc.body.statements) {
        if (s.kind == StatementKind::CallProcedure && s.proccode == proc.proccode) {
          Unit unit{actor, nullptr, &proc};
          out.push_back(makeIssue(self, unit, {s.blockId},
                                  {{"name", proc.proccode}}));
        }
      }
    }
  }
  // Receiver unconditionally re-broadcasting its own message.
  for (const Unit& unit : scriptUnits(ctx)) {
    const Script& script = *unit.script;
    if (script.event.kind != EventKind::ReceptionOfMessage) continue;
    for (const Statement& s : script.body.statements) {
      if (!isBroadcastKind(s)) continue;
      MessageId msg = broadcastMessage(s);
      if (sameMessage(msg, script.event.messageId, script.event.name))
        out.push_back(
            makeIssue(self, unit, {s.blockId}, {{"name", script.event.name}}));
    }
  }
}

void foreverInsideLoop(const Finder& self, const AnalysisContext& ctx,
                       std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind == StatementKind::Forever && info.insideLoop())
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void inappropriateHatblock(const Finder& self, const AnalysisContext& ctx,
                           std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    if (unit.script->event.kind != EventKind::GreenFlag) continue;
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind == StatementKind::DeleteThisClone)
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

bool statementHasSensingCondition(const Statement& s) {
  switch (s.kind) {
    case StatementKind::IfThen:
    case StatementKind::IfElse:
    case StatementKind::WaitUntil:
    case StatementKind::RepeatUntil: {
      const Expression* condition = s.input("CONDITION");
      return condition != nullptr && containsSensingReporter(*condition);
    }
    default:
      return false;
  }
}

void interruptedLoopSensing(const Finder& self, const AnalysisContext& ctx,
                            std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& loop, const WalkInfo&) {
      if (loop.kind != StatementKind::Forever &&
          loop.kind != StatementKind::RepeatTimes &&
          loop.kind != StatementKind::RepeatUntil)
        return;
      bool senses = statementHasSensingCondition(loop);
      bool consumesTime = false;
      std::string timeConsumer;
      for (const StatementList& sub : loop.subStacks) {
        walkStatements(sub, [&](const Statement& inner, const WalkInfo&) {
          if (statementHasSensingCondition(inner)) senses = true;
          if (isTimeConsumingStatement(inner) && !consumesTime) {
            consumesTime = true;
            timeConsumer = inner.opcode;
          }
        });
      }
      if (senses && consumesTime)
        out.push_back(
            makeIssue(self, unit, {loop.blockId}, {{"opcode", timeConsumer}}));
    });
  }
}

void messageNeverReceived(const Finder& self, const AnalysisContext& ctx,
                          std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (!isBroadcastKind(s)) return;
      MessageId msg = broadcastMessage(s);
      for (const ActorDefinition* actor : ctx.program.actors())
        for (const Script& script : actor->scripts)
          if (script.event.kind == EventKind::ReceptionOfMessage &&
              sameMessage(msg, script.event.messageId, script.event.name))
            return;
      out.push_back(makeIssue(self, unit, {s.blockId}, {{"message", msg.name}}));
    });
  }
}

void messageNeverSent(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const EventStatus& status : ctx.events) {
    if (status.event.kind != EventKind::ReceptionOfMessage || status.fired)
      continue;
    if (!ctx.scriptVisible(*status.script)) continue;
    Unit unit{status.actor, status.script, nullptr};
    out.push_back(makeIssue(self, unit, {status.script->topBlockId},
                            {{"message", status.event.name}}));
  }
}

void missingAsk(const Finder& self, const AnalysisContext& ctx,
                std::vector<Issue>& out) {
  bool askUsed = false;
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind == StatementKind::AskAndWait) askUsed = true;
    });
  }
  if (askUsed) return;
  // One issue per answer block.
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      for (const AnchoredExpression& ae : anchoredExpressions(s))
        if (ae.expression->kind == ExpressionKind::Answer)
          out.push_back(makeIssue(self, unit, {ae.anchorBlockId}));
    });
  }
}

void missingCloneCall(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const EventStatus& status : ctx.events) {
    if (status.event.kind != EventKind::StartedAsClone || status.fired) continue;
    if (!ctx.scriptVisible(*status.script)) continue;
    Unit unit{status.actor, status.script, nullptr};
    out.push_back(makeIssue(self, unit, {status.script->topBlockId},
                            {{"sprite", status.actor->name}}));
  }
}

void missingCloneInitialization(const Finder& self, const AnalysisContext& ctx,
                                std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::CreateCloneOf) return;
      for (const std::string& target : cloneTargets(s, *unit.actor)) {
        const ActorDefinition* actor = ctx.program.actorByName(target);
        if (actor == nullptr) continue;
        bool hasHandler = false;
        for (const Script& script : actor->scripts)
          if (script.event.kind == EventKind::StartedAsClone) hasHandler = true;
        if (!hasHandler)
          out.push_back(makeIssue(self, unit, {s.blockId}, {{"target", target}}));
      }
    });
  }
}

void missingInitialization(const Finder& self, const AnalysisContext& ctx,
                           std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      int node = ctx.cfg.nodeForStatement(&s);
      if (node < 0) return;
      for (const ReadSite& read : statementReads(s, *unit.actor, ctx.program)) {
        if (!ctx.defined.definedOnEntry(node, read.key))
          out.push_back(makeIssue(self, unit, {read.anchorBlockId},
                                  {{"name", read.displayName}}));
      }
    });
  }
}

void missingLoopSensing(const Finder& self, const AnalysisContext& ctx,
                        std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::IfThen && s.kind != StatementKind::IfElse)
        return;
      if (info.insideLoop()) return;
      const Expression* condition = s.input("CONDITION");
      if (condition != nullptr && containsSensingReporter(*condition))
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void noWorkingScripts(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    if (actor->scripts.empty()) continue;
    bool anyWorking = false;
    for (const Script& script : actor->scripts)
      if (script.event.kind != EventKind::NEVER && !script.body.empty())
        anyWorking = true;
    if (anyWorking) continue;
    Issue issue = makeActorIssue(self, actor->name,
                                 {actor->scripts[0].topBlockId},
                                 {{"sprite", actor->name}});
    issue.scriptTopBlockId = actor->scripts[0].topBlockId;
    out.push_back(std::move(issue));
  }
}

void positionEqualsCheck(const Finder& self, const AnalysisContext& ctx,
                         std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      for (const AnchoredExpression& ae : anchoredExpressions(s)) {
        const Expression& e = *ae.expression;
        if (e.kind != ExpressionKind::Comparison ||
            e.comparison != ComparisonOp::EQ)
          continue;
        for (const Expression& operand : e.operands) {
          if (isPositionReporterOpcode(operand.opcode)) {
            out.push_back(makeIssue(self, unit, {ae.anchorBlockId},
                                    {{"reporter", operand.opcode}}));
            break;
          }
        }
      }
    });
  }
}

void recursiveCloning(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    const Script& script = *unit.script;
    if (script.event.kind != EventKind::StartedAsClone) continue;
    for (const Statement& s : script.body.statements) {
      if (s.kind != StatementKind::CreateCloneOf) continue;
      for (const std::string& target : cloneTargets(s, *unit.actor))
        if (target == unit.actor->name)
          out.push_back(makeIssue(self, unit, {s.blockId},
                                  {{"sprite", unit.actor->name}}));
    }
  }
}

void stopAfterSay(const Finder& self, const AnalysisContext& ctx,
                  std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::Say) return;
      const auto& stmts = info.container->statements;
      if (info.index + 1 >= stmts.size()) return;
      const Statement& next = stmts[info.index + 1];
      if (next.kind == StatementKind::Stop &&
          (next.stopTarget == StopTarget::ALL ||
           next.stopTarget == StopTarget::THIS_SCRIPT))
        out.push_back(makeIssue(self, unit, {s.blockId, next.blockId}));
    });
  }
}

void terminatedLoop(const Finder& self, const AnalysisContext& ctx,
                    std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::Forever &&
          s.kind != StatementKind::RepeatTimes &&
          s.kind != StatementKind::RepeatUntil)
        return;
      for (const StatementList& sub : s.subStacks)
        for (const Statement& inner : sub.statements)
          if (ControlFlowGraph::isTerminal(inner)) {
            out.push_back(makeIssue(self, unit, {s.blockId}));
            return;
          }
    });
  }
}

void typeError(const Finder& self, const AnalysisContext& ctx,
               std::vector<Issue>& out) {
  auto incompatible = [](const Expression& a, const Expression& b) {
    return a.kind == ExpressionKind::StringLiteral && !isNumericText(a.text) &&
           b.kind == ExpressionKind::NumberLiteral;
  };
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      for (const AnchoredExpression& ae : anchoredExpressions(s)) {
        const Expression& e = *ae.expression;
        if (e.kind != ExpressionKind::Comparison || e.operands.size() != 2)
          continue;
        if (incompatible(e.operands[0], e.operands[1]) ||
            incompatible(e.operands[1], e.operands[0]))
          out.push_back(makeIssue(self, unit, {ae.anchorBlockId},
                                  {{"left", literalDisplay(e.operands[0])},
                                   {"right", literalDisplay(e.operands[1])}}));
      }
    });
  }
}

bool isArithmeticOpcode(const std::string& opcode) {
  return opcode == "operator_add" || opcode == "operator_subtract" ||
         opcode == "operator_multiply" || opcode == "operator_divide" ||
         opcode == "operator_mod";
}

void variableAsLiteral(const Finder& self, const AnalysisContext& ctx,
                       std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    std::set<std::string> visible;
    for (const VariableDecl& v : unit.actor->variables) visible.insert(v.name);
    for (const VariableDecl& v : ctx.program.stage.variables) visible.insert(v.name);
    if (visible.empty()) continue;

    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      for (const AnchoredExpression& ae : anchoredExpressions(s)) {
        const Expression& e = *ae.expression;
        bool relevantParent = e.kind == ExpressionKind::Comparison ||
                              (e.kind == ExpressionKind::Reporter &&
                               isArithmeticOpcode(e.opcode));
        if (!relevantParent) continue;
        const std::string& anchor = e.blockId.empty() ? ae.anchorBlockId : e.blockId;
        for (const Expression& operand : e.operands) {
          if (operand.kind == ExpressionKind::StringLiteral &&
              visible.count(operand.text) > 0)
            out.push_back(
                makeIssue(self, unit, {anchor}, {{"literal", operand.text}}));
        }
      }
    });
  }
}

}  // namespace

std::vector<std::unique_ptr<Finder>> generalBugFinders() {
  std::vector<std::unique_ptr<Finder>> finders;
  auto add = [&](std::string_view id, RuleFinder::CheckFn fn) {
    finders.push_back(
        std::make_unique<RuleFinder>(id, IssueCategory::GENERAL_BUG, fn));
  };
  add("blocking_if_else", blockingIfElse);
  add("comparing_literals", comparingLiterals);
  add("custom_block_with_forever", customBlockWithForever);
  add("custom_block_with_termination", customBlockWithTermination);
  add("delete_clone_after_broadcast", deleteCloneAfterBroadcast);
  add("endless_recursion", endlessRecursion);
  add("forever_inside_loop", foreverInsideLoop);
  add("inappropriate_hatblock", inappropriateHatblock);
  add("interrupted_loop_sensing", interruptedLoopSensing);
  add("message_never_received", messageNeverReceived);
  add("message_never_sent", messageNeverSent);
  add("missing_ask", missingAsk);
  add("missing_clone_call", missingCloneCall);
  add("missing_clone_initialization", missingCloneInitialization);
  add("missing_initialization", missingInitialization);
  add("missing_loop_sensing", missingLoopSensing);
  add("no_working_scripts", noWorkingScripts);
  add("position_equals_check", positionEqualsCheck);
  add("recursive_cloning", recursiveCloning);
  add("stop_after_say", stopAfterSay);
  add("terminated_loop", terminatedLoop);
  add("type_error", typeError);
  add("variable_as_literal", variableAsLiteral);
  return finders;
}

}  // namespace sb3lint::catalog
