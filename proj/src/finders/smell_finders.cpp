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
// Code smells: structurally legal code that hurts readability or hints at
// future bugs (duplication, dead weight, uncommunicative names).

#include <cctype>
#include <map>
#include <set>

#include "finders/catalog.hpp"
#include "finders/finder_util.hpp"
#include "sb3lint/equality.hpp"
#include "sb3lint/opcodes.hpp"

namespace sb3lint::catalog {

namespace {

using namespace finderutil;

bool isLoopKind(StatementKind kind) {
  return kind == StatementKind::Forever || kind == StatementKind::RepeatTimes ||
         kind == StatementKind::RepeatUntil;
}

std::string lowercase(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// name matches `prefix` followed only by digits (case-insensitive).
bool isDefaultName(const std::string& name,
                   const std::vector<std::string>& prefixes) {
  std::string low = lowercase(name);
  for (const std::string& prefix : prefixes) {
    if (low.size() < prefix.size() || low.compare(0, prefix.size(), prefix) != 0)
      continue;
    bool digitsOnly = true;
    for (std::size_t i = prefix.size(); i < low.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(low[i]))) digitsOnly = false;
    if (digitsOnly) return true;
  }
  return false;
}

void busyWaiting(const Finder& self, const AnalysisContext& ctx,
                 std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::Forever || s.subStacks.empty()) return;
      const StatementList& body = s.subStacks[0];
      if (body.size() != 1) return;
      const Statement& inner = body.statements[0];
      if (inner.kind != StatementKind::IfThen || inner.subStacks.empty()) return;
      const StatementList& thenBody = inner.subStacks[0];
      if (thenBody.size() != 1) return;
      const Statement& stop = thenBody.statements[0];
      if (stop.kind == StatementKind::Stop &&
          stop.stopTarget == StopTarget::THIS_SCRIPT)
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void codeLyingAround(const Finder& self, const AnalysisContext& ctx,
                     std::vector<Issue>& out) {
  // Deliberately ignores --ignore-loose: this is the one finder that
  // reports loose code.
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const Script& script : actor->scripts) {
      if (script.event.kind == EventKind::NEVER && !script.body.empty()) {
        Unit unit{actor, &script, nullptr};
        out.push_back(makeIssue(self, unit, {script.topBlockId}));
      }
    }
  }
}

void doubleIf(const Finder& self, const AnalysisContext& ctx,
              std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::IfThen) return;
      const auto& stmts = info.container->statements;
      if (info.index + 1 >= stmts.size()) return;
      const Statement& next = stmts[info.index + 1];
      if (next.kind != StatementKind::IfThen) return;
      const Expression* a = s.input("CONDITION");
      const Expression* b = next.input("CONDITION");
      if (a != nullptr && b != nullptr && structurallyEqual(*a, *b))
        out.push_back(makeIssue(self, unit, {s.blockId, next.blockId}));
    });
  }
}

void duplicateSprite(const Finder& self, const AnalysisContext& ctx,
                     std::vector<Issue>& out) {
  std::map<std::string, std::vector<const ActorDefinition*>> byShape;
  for (const ActorDefinition& sprite : ctx.program.sprites) {
    if (sprite.scripts.empty()) continue;
    std::vector<std::string> forms;
    for (const Script& script : sprite.scripts)
      forms.push_back(normalizedForm(script));
    std::sort(forms.begin(), forms.end());
    std::string key;
    for (const std::string& f : forms) key += f + '\x1f';
    byShape[key].push_back(&sprite);
  }
  for (const auto& [key, sprites] : byShape) {
    for (std::size_t i = 0; i < sprites.size(); ++i) {
      for (std::size_t j = i + 1; j < sprites.size(); ++j) {
        out.push_back(makeActorIssue(self, sprites[i]->name,
                                     {sprites[i]->scripts[0].topBlockId},
                                     {{"sprite", sprites[i]->name},
                                      {"other", sprites[j]->name}}));
      }
    }
  }
}

void duplicatedScript(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    std::map<std::string, std::vector<const Script*>> byForm;
    for (const Script& script : actor->scripts) {
      if (script.event.kind == EventKind::NEVER) continue;
      byForm[normalizedForm(script)].push_back(&script);
    }
    for (const auto& [form, scripts] : byForm) {
      for (std::size_t i = 0; i < scripts.size(); ++i) {
        for (std::size_t j = i + 1; j < scripts.size(); ++j) {
          Unit unit{actor, scripts[i], nullptr};
          out.push_back(makeIssue(
              self, unit, {scripts[i]->topBlockId, scripts[j]->topBlockId}));
        }
      }
    }
  }
}

void emptyControlBody(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (!isLoopKind(s.kind) && s.kind != StatementKind::IfThen &&
          s.kind != StatementKind::IfElse)
        return;
      for (const StatementList& sub : s.subStacks) {
        if (sub.empty()) {
          // "control_if" -> "if"
          std::string kind = s.opcode;
          std::size_t underscore = kind.find('_');
          if (underscore != std::string::npos) kind = kind.substr(underscore + 1);
          out.push_back(makeIssue(self, unit, {s.blockId}, {{"kind", kind}}));
          return;
        }
      }
    });
  }
}

void emptyCustomBlock(const Finder& self, const AnalysisContext& ctx,
                      std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const ProcedureDefinition& proc : actor->procedures) {
      if (proc.body.empty()) {
        Unit unit{actor, nullptr, &proc};
        out.push_back(makeIssue(self, unit, {proc.definitionBlockId},
                                {{"proccode", proc.proccode}}));
      }
    }
  }
}

void emptyProject(const Finder& self, const AnalysisContext& ctx,
                  std::vector<Issue>& out) {
  if (ctx.program.sprites.empty() && ctx.program.stage.scripts.empty())
    out.push_back(makeActorIssue(self, ctx.program.stage.name, {}));
}

void emptyScript(const Finder& self, const AnalysisContext& ctx,
                 std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    if (unit.script->event.kind != EventKind::NEVER && unit.script->body.empty())
      out.push_back(makeIssue(self, unit, {unit.script->topBlockId}));
  }
}

void emptySprite(const Finder& self, const AnalysisContext& ctx,
                 std::vector<Issue>& out) {
  for (const ActorDefinition& sprite : ctx.program.sprites) {
    if (sprite.scripts.empty() && sprite.procedures.empty())
      out.push_back(
          makeActorIssue(self, sprite.name, {}, {{"sprite", sprite.name}}));
  }
}

std::int64_t countStatements(const StatementList& list) {
  std::int64_t n = 0;
  for (const Statement& s : list.statements) {
    ++n;
    for (const StatementList& sub : s.subStacks) n += countStatements(sub);
  }
  return n;
}

void longScript(const Finder& self, const AnalysisContext& ctx,
                std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    std::int64_t blocks = countStatements(unit.script->body);
    if (unit.script->event.kind != EventKind::NEVER) ++blocks;  // the hat
    if (blocks > ctx.config.longScriptThreshold)
      out.push_back(makeIssue(
          self, unit, {unit.script->topBlockId},
          {{"length", std::to_string(blocks)},
           {"threshold", std::to_string(ctx.config.longScriptThreshold)}}));
  }
}

void messageNaming(const Finder& self, const AnalysisContext& ctx,
                   std::vector<Issue>& out) {
  struct Usage {
    Unit unit;
    std::string blockId;
    std::string name;
  };
  std::map<std::string, Usage> firstUsage;  // keyed by id-or-name
  auto record = [&](const std::string& id, const std::string& name,
                    const Unit& unit, const std::string& blockId) {
    std::string key = id.empty() ? "name:" + name : "id:" + id;
    if (firstUsage.count(key) == 0) firstUsage[key] = {unit, blockId, name};
  };
  // One pass in traversal order so the anchor is the first usage.
  for (const Unit& unit : units(ctx)) {
    if (unit.script != nullptr &&
        unit.script->event.kind == EventKind::ReceptionOfMessage)
      record(unit.script->event.messageId, unit.script->event.name, unit,
             unit.script->topBlockId);
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::Broadcast &&
          s.kind != StatementKind::BroadcastAndWait)
        return;
      const Expression* msg = s.input("BROADCAST_INPUT");
      if (msg != nullptr && msg->kind == ExpressionKind::BroadcastRef)
        record(msg->refId, msg->text, unit, s.blockId);
    });
  }
  for (const auto& [key, usage] : firstUsage) {
    bool bad = usage.name.size() <= 1 ||
               isDefaultName(usage.name, {"message", "nachricht", "mensaje"});
    if (bad)
      out.push_back(makeIssue(self, usage.unit, {usage.blockId},
                              {{"message", usage.name}}));
  }
}

void middleMan(const Finder& self, const AnalysisContext& ctx,
               std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    const Script& script = *unit.script;
    if (script.event.kind != EventKind::ReceptionOfMessage) continue;
    if (script.body.size() != 1) continue;
    const Statement& only = script.body.statements[0];
    if (only.kind == StatementKind::Broadcast ||
        only.kind == StatementKind::BroadcastAndWait) {
      const Expression* msg = only.input("BROADCAST_INPUT");
      out.push_back(makeIssue(self, unit, {only.blockId},
                              {{"kind", "receiver"},
                               {"target", msg != nullptr ? msg->text : ""}}));
    }
  }
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const ProcedureDefinition& proc : actor->procedures) {
      if (proc.body.size() != 1) continue;
      const Statement& only = proc.body.statements[0];
      if (only.kind == StatementKind::CallProcedure) {
        Unit unit{actor, nullptr, &proc};
        out.push_back(makeIssue(self, unit, {only.blockId},
                                {{"kind", "custom block"},
                                 {"target", only.proccode}}));
      }
    }
  }
}

// Attribute identity for set/change runs; empty = not a modification.
std::string modificationKey(const Statement& s) {
  switch (s.kind) {
    case StatementKind::SetVariable:
    case StatementKind::ChangeVariableBy: {
      const Field* f = s.field("VARIABLE");
      return f != nullptr ? "var:" + (f->id.empty() ? f->value : f->id) : "";
    }
    case StatementKind::SetX:
    case StatementKind::ChangeXBy:
      return "x";
    case StatementKind::SetY:
    case StatementKind::ChangeYBy:
      return "y";
    case StatementKind::SetSizeTo:
    case StatementKind::ChangeSizeBy:
      return "size";
    case StatementKind::PointInDirection:
    case StatementKind::TurnLeft:
    case StatementKind::TurnRight:
      return "direction";
    case StatementKind::SetVolumeTo:
    case StatementKind::ChangeVolumeBy:
      return "volume";
    case StatementKind::SetPenSizeTo:
    case StatementKind::ChangePenSizeBy:
      return "pen size";
    case StatementKind::SetGraphicEffectTo:
    case StatementKind::ChangeGraphicEffectBy: {
      const Field* f = s.field("EFFECT");
      return "fx:" + (f != nullptr ? f->value : "");
    }
    case StatementKind::SetSoundEffectTo:
    case StatementKind::ChangeSoundEffectBy: {
      const Field* f = s.field("EFFECT");
      return "soundfx:" + (f != nullptr ? f->value : "");
    }
    case StatementKind::SwitchCostumeTo:
    case StatementKind::NextCostume:
      return "costume";
    case StatementKind::SwitchBackdropTo:
    case StatementKind::NextBackdrop:
      return "backdrop";
    default:
      return "";
  }
}

std::string modificationDisplay(const Statement& s, const std::string& key) {
  if (key.rfind("var:", 0) == 0) {
    const Field* f = s.field("VARIABLE");
    if (f != nullptr) return f->value;
  }
  if (key.rfind("fx:", 0) == 0 || key.rfind("soundfx:", 0) == 0) {
    const Field* f = s.field("EFFECT");
    if (f != nullptr) return f->value + " effect";
  }
  return key;
}

// Scans every statement list for maximal runs satisfying `sameGroup`.
void forEachRun(const StatementList& list, std::size_t minLen,
                const std::function<bool(const Statement&, const Statement&)>& sameGroup,
                const std::function<bool(const Statement&)>& eligible,
                const std::function<void(const std::vector<const Statement*>&)>& emit) {
  const auto& stmts = list.statements;
  std::size_t i = 0;
  while (i < stmts.size()) {
    if (!eligible(stmts[i])) {
      for (const StatementList& sub : stmts[i].subStacks)
        forEachRun(sub, minLen, sameGroup, eligible, emit);
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < stmts.size() && eligible(stmts[j]) &&
           sameGroup(stmts[i], stmts[j]))
      ++j;
    if (j - i >= minLen) {
      std::vector<const Statement*> run;
      for (std::size_t k = i; k < j; ++k) run.push_back(&stmts[k]);
      emit(run);
    }
    for (std::size_t k = i; k < j; ++k)
      for (const StatementList& sub : stmts[k].subStacks)
        forEachRun(sub, minLen, sameGroup, eligible, emit);
    i = j;
  }
}

void multiAttributeModification(const Finder& self, const AnalysisContext& ctx,
                                std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    forEachRun(
        unit.body(), 2,
        [](const Statement& a, const Statement& b) {
          return modificationKey(a) == modificationKey(b);
        },
        [](const Statement& s) { return !modificationKey(s).empty(); },
        [&](const std::vector<const Statement*>& run) {
          std::vector<std::string> ids;
          for (const Statement* s : run) ids.push_back(s->blockId);
          std::string key = modificationKey(*run[0]);
          out.push_back(makeIssue(self, unit, ids,
                                  {{"name", modificationDisplay(*run[0], key)},
                                   {"count", std::to_string(run.size())}}));
        });
  }
}

void nestedLoops(const Finder& self, const AnalysisContext& ctx,
                 std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (!isLoopKind(s.kind) || s.subStacks.empty()) return;
      const StatementList& body = s.subStacks[0];
      if (body.size() == 1 && isLoopKind(body.statements[0].kind))
        out.push_back(makeIssue(self, unit, {s.blockId}));
    });
  }
}

void sameVariableDifferentSprite(const Finder& self, const AnalysisContext& ctx,
                                 std::vector<Issue>& out) {
  std::map<std::string, std::vector<const ActorDefinition*>> byName;
  for (const ActorDefinition* actor : ctx.program.actors())
    for (const VariableDecl& v : actor->variables)
      if (v.scope == VariableScope::LOCAL) byName[v.name].push_back(actor);
  for (const auto& [name, actors] : byName) {
    std::set<const ActorDefinition*> distinct(actors.begin(), actors.end());
    if (distinct.size() < 2) continue;
    out.push_back(makeActorIssue(self, (*distinct.begin())->name, {},
                                 {{"name", name},
                                  {"count", std::to_string(distinct.size())}}));
  }
}

void sequentialActions(const Finder& self, const AnalysisContext& ctx,
                       std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    forEachRun(
        unit.body(), 3,
        [](const Statement& a, const Statement& b) {
          return structurallyEqual(a, b);
        },
        [](const Statement& s) { return s.subStacks.empty(); },
        [&](const std::vector<const Statement*>& run) {
          std::vector<std::string> ids;
          for (const Statement* s : run) ids.push_back(s->blockId);
          out.push_back(makeIssue(self, unit, ids,
                                  {{"count", std::to_string(run.size())}}));
        });
  }
}

void spriteNaming(const Finder& self, const AnalysisContext& ctx,
                  std::vector<Issue>& out) {
  for (const ActorDefinition& sprite : ctx.program.sprites) {
    if (isDefaultName(sprite.name, {"sprite", "figur", "objeto"}))
      out.push_back(
          makeActorIssue(self, sprite.name, {}, {{"sprite", sprite.name}}));
  }
}

void unnecessaryIfAfterUntil(const Finder& self, const AnalysisContext& ctx,
                             std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo& info) {
      if (s.kind != StatementKind::RepeatUntil) return;
      const auto& stmts = info.container->statements;
      if (info.index + 1 >= stmts.size()) return;
      const Statement& next = stmts[info.index + 1];
      if (next.kind != StatementKind::IfThen) return;
      const Expression* a = s.input("CONDITION");
      const Expression* b = next.input("CONDITION");
      if (a != nullptr && b != nullptr && structurallyEqual(*a, *b))
        out.push_back(makeIssue(self, unit, {s.blockId, next.blockId}));
    });
  }
}

void unnecessaryLoop(const Finder& self, const AnalysisContext& ctx,
                     std::vector<Issue>& out) {
  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::RepeatTimes) return;
      const Expression* times = s.input("TIMES");
      if (times != nullptr && times->kind == ExpressionKind::NumberLiteral &&
          times->number <= 1.0)
        out.push_back(makeIssue(self, unit, {s.blockId},
                                {{"count", literalDisplay(*times)}}));
    });
  }
}

void unusedCustomBlock(const Finder& self, const AnalysisContext& ctx,
                       std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    std::set<std::string> called;
    auto scan = [&](const StatementList& body) {
      walkStatements(body, [&](const Statement& s, const WalkInfo&) {
        if (s.kind == StatementKind::CallProcedure) called.insert(s.proccode);
      });
    };
    for (const Script& script : actor->scripts) scan(script.body);
    for (const ProcedureDefinition& proc : actor->procedures) scan(proc.body);
    for (const ProcedureDefinition& proc : actor->procedures) {
      if (called.count(proc.proccode) == 0) {
        Unit unit{actor, nullptr, &proc};
        out.push_back(makeIssue(self, unit, {proc.definitionBlockId},
                                {{"proccode", proc.proccode}}));
      }
    }
  }
}

void unusedParameter(const Finder& self, const AnalysisContext& ctx,
                     std::vector<Issue>& out) {
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const ProcedureDefinition& proc : actor->procedures) {
      std::set<std::string> used;
      walkStatements(proc.body, [&](const Statement& s, const WalkInfo&) {
        for (const AnchoredExpression& ae : anchoredExpressions(s))
          if (ae.expression->kind == ExpressionKind::ParameterRef)
            used.insert(ae.expression->text);
      });
      for (const auto& [name, kind] : proc.parameters) {
        if (used.count(name) == 0) {
          Unit unit{actor, nullptr, &proc};
          out.push_back(makeIssue(self, unit, {proc.definitionBlockId},
                                  {{"param", name}, {"proccode", proc.proccode}}));
        }
      }
    }
  }
}

void unusedVariable(const Finder& self, const AnalysisContext& ctx,
                    std::vector<Issue>& out) {
  std::set<std::string> referenced;
  auto scanExpression = [&](const Expression& e, auto&& scan) -> void {
    if (e.kind == ExpressionKind::VariableRef && !e.refId.empty())
      referenced.insert(e.refId);
    for (const Expression& operand : e.operands) scan(operand, scan);
  };
  auto scanBody = [&](const StatementList& body) {
    walkStatements(body, [&](const Statement& s, const WalkInfo&) {
      switch (s.kind) {
        case StatementKind::SetVariable:
        case StatementKind::ChangeVariableBy:
        case StatementKind::ShowVariable:
        case StatementKind::HideVariable: {
          const Field* f = s.field("VARIABLE");
          if (f != nullptr && !f->id.empty()) referenced.insert(f->id);
          break;
        }
        default:
          break;
      }
      for (const Expression& input : s.inputs) scanExpression(input, scanExpression);
    });
  };
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const Script& script : actor->scripts) scanBody(script.body);
    for (const ProcedureDefinition& proc : actor->procedures) scanBody(proc.body);
  }
  for (const ActorDefinition* actor : ctx.program.actors()) {
    for (const VariableDecl& v : actor->variables) {
      if (referenced.count(v.id) == 0)
        out.push_back(
            makeActorIssue(self, actor->name, {}, {{"name", v.name}}));
    }
  }
}

void variableInitializationRace(const Finder& self, const AnalysisContext& ctx,
                                std::vector<Issue>& out) {
  struct Setter {
    const ActorDefinition* actor;
    const Script* script;
    std::string varId;
    std::string varName;
    std::string value;
    std::string blockId;
  };
  std::vector<Setter> setters;
  for (const Unit& unit : scriptUnits(ctx)) {
    const Script& script = *unit.script;
    if (script.event.kind == EventKind::NEVER) continue;
    walkStatements(script.body, [&](const Statement& s, const WalkInfo&) {
      if (s.kind != StatementKind::SetVariable) return;
      const Field* var = s.field("VARIABLE");
      const Expression* value = s.input("VALUE");
      if (var == nullptr || value == nullptr || !value->isLiteral()) return;
      setters.push_back({unit.actor, &script,
                         var->id.empty() ? var->value : var->id, var->value,
                         literalDisplay(*value), s.blockId});
    });
  }
  for (std::size_t i = 0; i < setters.size(); ++i) {
    for (std::size_t j = i + 1; j < setters.size(); ++j) {
      const Setter& a = setters[i];
      const Setter& b = setters[j];
      if (a.script == b.script || a.varId != b.varId || a.value == b.value)
        continue;
      if (!(a.script->event == b.script->event)) continue;
      std::vector<std::string> blockIds = {a.blockId};
      if (a.actor == b.actor) blockIds.push_back(b.blockId);
      Unit unit{a.actor, a.script, nullptr};
      out.push_back(makeIssue(self, unit, blockIds,
                              {{"variable", a.varName},
                               {"value1", a.value},
                               {"value2", b.value}}));
    }
  }
}

}  // namespace

std::vector<std::unique_ptr<Finder>> smellFinders() {
  std::vector<std::unique_ptr<Finder>> finders;
  auto add = [&](std::string_view id, RuleFinder::CheckFn fn) {
    finders.push_back(
        std::make_unique<RuleFinder>(id, IssueCategory::CODE_SMELL, fn));
  };
  add("busy_waiting", busyWaiting);
  add("code_lying_around", codeLyingAround);
  add("double_if", doubleIf);
  add("duplicate_sprite", duplicateSprite);
  add("duplicated_script", duplicatedScript);
  add("empty_control_body", emptyControlBody);
  add("empty_custom_block", emptyCustomBlock);
  add("empty_project", emptyProject);
  add("empty_script", emptyScript);
  add("empty_sprite", emptySprite);
  add("long_script", longScript);
  add("message_naming", messageNaming);
  add("middle_man", middleMan);
  add("multi_attribute_modification", multiAttributeModification);
  add("nested_loops", nestedLoops);
  add("same_variable_different_sprite", sameVariableDifferentSprite);
  add("sequential_actions", sequentialActions);
  add("sprite_naming", spriteNaming);
  add("unnecessary_if_after_until", unnecessaryIfAfterUntil);
  add("unnecessary_loop", unnecessaryLoop);
  add("unused_custom_block", unusedCustomBlock);
  add("unused_parameter", unusedParameter);
  add("unused_variable", unusedVariable);
  add("variable_initialization_race", variableInitializationRace);
  return finders;
}

}  // namespace sb3lint::catalog
