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
// Stage-and-sprite specific bugs: dead event handlers, pen state misuse,
// missing assets, typematic movement.

#include <algorithm>

#include "finders/catalog.hpp"
#include "finders/finder_util.hpp"
#include "sb3lint/opcodes.hpp"

namespace sb3lint::catalog {

namespace {

using namespace finderutil;

// First statement of the given kind in deterministic traversal order.
struct FirstHit {
  bool found = false;
  Unit unit;
  std::string blockId;
};

FirstHit firstStatement(const AnalysisContext& ctx, StatementKind kind) {
  FirstHit hit;
  for (const Unit& unit : units(ctx)) {
    if (hit.found) break;
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (!hit.found && s.kind == kind) {
        hit.found = true;
        hit.unit = unit;
        hit.blockId = s.blockId;
      }
    });
  }
  return hit;
}

bool anyStatement(const AnalysisContext& ctx, StatementKind kind) {
  for (const Unit& unit : units(ctx)) {
    bool found = false;
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      if (s.kind == kind) found = true;
    });
    if (found) return true;
  }
  return false;
}

void missingBackdropSwitch(const Finder& self, const AnalysisContext& ctx,
                           std::vector<Issue>& out) {
  for (const EventStatus& status : ctx.events) {
    if (status.event.kind != EventKind::BackdropSwitchTo || status.fired) continue;
    if (!ctx.scriptVisible(*status.script)) continue;
    Unit unit{status.actor, status.script, nullptr};
    out.push_back(makeIssue(self, unit, {status.script->topBlockId},
                            {{"backdrop", status.event.name}}));
  }
}

void missingEraseAll(const Finder& self, const AnalysisContext& ctx,
                     std::vector<Issue>& out) {
  if (anyStatement(ctx, StatementKind::EraseAll)) return;
  FirstHit penDown = firstStatement(ctx, StatementKind::PenDown);
  if (penDown.found)
    out.push_back(makeIssue(self, penDown.unit, {penDown.blockId}));
}

void missingPenDown(const Finder& self, const AnalysisContext& ctx,
                    std::vector<Issue>& out) {
  if (anyStatement(ctx, StatementKind::PenDown)) return;
  FirstHit penUp = firstStatement(ctx, StatementKind::PenUp);
  if (penUp.found) out.push_back(makeIssue(self, penUp.unit, {penUp.blockId}));
}

void missingPenUp(const Finder& self, const AnalysisContext& ctx,
                  std::vector<Issue>& out) {
  if (anyStatement(ctx, StatementKind::PenUp)) return;
  FirstHit penDown = firstStatement(ctx, StatementKind::PenDown);
  if (penDown.found)
    out.push_back(makeIssue(self, penDown.unit, {penDown.blockId}));
}

bool isBackdropSpecial(const std::string& name) {
  return name == "next backdrop" || name == "previous backdrop" ||
         name == "random backdrop";
}

void missingResource(const Finder& self, const AnalysisContext& ctx,
                     std::vector<Issue>& out) {
  auto available = [&](const ActorDefinition& actor, bool sounds) {
    std::vector<std::string> names =
        sounds ? actor.soundNames : actor.costumeNames;
    if (const auto* assets = ctx.assets.forActor(actor.name)) {
      for (const std::string& missing : assets->missingFiles)
        names.erase(std::remove(names.begin(), names.end(), missing), names.end());
    }
    return names;
  };

  for (const Unit& unit : units(ctx)) {
    walkStatements(unit.body(), [&](const Statement& s, const WalkInfo&) {
      const char* kind = nullptr;
      const Expression* name = nullptr;
      const ActorDefinition* owner = unit.actor;
      bool sounds = false;
      switch (s.kind) {
        case StatementKind::SwitchCostumeTo:
          kind = "costume";
          name = s.input("COSTUME");
          break;
        case StatementKind::StartSound:
        case StatementKind::PlaySoundUntilDone:
          kind = "sound";
          name = s.input("SOUND_MENU");
          sounds = true;
          break;
        case StatementKind::SwitchBackdropTo:
        case StatementKind::SwitchBackdropToAndWait:
          kind = "backdrop";
          name = s.input("BACKDROP");
          owner = &ctx.program.stage;
          break;
        default:
          return;
      }
      if (name == nullptr || name->kind != ExpressionKind::StringLiteral) return;
      if (s.kind != StatementKind::SwitchCostumeTo && sounds == false &&
          isBackdropSpecial(name->text))
        return;
      std::vector<std::string> names = available(*owner, sounds);
      if (std::find(names.begin(), names.end(), name->text) == names.end()) {
        out.push_back(makeIssue(self, unit, {s.blockId},
                                {{"kind", kind},
                                 {"name", name->text},
                                 {"sprite", owner->name}}));
      }
    });
  }
}

void stutteringMovement(const Finder& self, const AnalysisContext& ctx,
                        std::vector<Issue>& out) {
  for (const Unit& unit : scriptUnits(ctx)) {
    const Script& script = *unit.script;
    if (script.event.kind != EventKind::KeyPressed) continue;
    if (script.body.size() != 1) continue;
    const Statement& only = script.body.statements[0];
    switch (only.kind) {
      case StatementKind::MoveSteps:
      case StatementKind::TurnLeft:
      case StatementKind::TurnRight:
      case StatementKind::ChangeXBy:
      case StatementKind::ChangeYBy:
        out.push_back(makeIssue(self, unit, {only.blockId},
                                {{"key", script.event.key}}));
        break;
      default:
        break;
    }
  }
}

}  // namespace

std::vector<std::unique_ptr<Finder>> scratchBugFinders() {
  std::vector<std::unique_ptr<Finder>> finders;
  auto add = [&](std::string_view id, RuleFinder::CheckFn fn) {
    finders.push_back(
        std::make_unique<RuleFinder>(id, IssueCategory::SCRATCH_BUG, fn));
  };
  add("missing_backdrop_switch", missingBackdropSwitch);
  add("missing_erase_all", missingEraseAll);
  add("missing_pen_down", missingPenDown);
  add("missing_pen_up", missingPenUp);
  add("missing_resource", missingResource);
  add("stuttering_movement", stutteringMovement);
  return finders;
}

}  // namespace sb3lint::catalog
