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
// Typed AST for Scratch 3.0 projects. Programs are immutable after parsing
// and safe to share across concurrent analyses.

#ifndef SB3LINT_AST_HPP
#define SB3LINT_AST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sb3lint {

// ---------------------------------------------------------------------------
// Expressions

enum class ExpressionKind {
  NumberLiteral,
  StringLiteral,
  BoolLiteral,
  ColorLiteral,
  VariableRef,
  ListRef,
  BroadcastRef,
  ParameterRef,
  Answer,
  Comparison,
  BoolOp,
  Reporter,    // any other reporter block, identified by opcode
  EmptyBool,   // unfilled pointed slot
  EmptyNumber  // unfilled round slot
};

enum class ComparisonOp { EQ, LT, GT };
enum class BoolOpKind { AND, OR, NOT };
enum class ParameterKind { STRING_NUMBER, BOOLEAN };

// Dropdown selection on a block: a value plus an optional id
// (variables, lists and broadcasts carry ids).
struct Field {
  std::string value;
  std::string id;
};

struct Expression {
  ExpressionKind kind = ExpressionKind::EmptyNumber;
  std::string blockId;  // empty for primitives folded from input arrays

  // Raw opcode for Reporter nodes (and kept for Comparison/BoolOp/Answer).
  std::string opcode;

  double number = 0.0;     // NumberLiteral
  bool boolValue = false;  // BoolLiteral
  // StringLiteral text, ColorLiteral hex, VariableRef/ListRef/BroadcastRef
  // name, ParameterRef name.
  std::string text;
  std::string refId;  // variable/list/broadcast id

  ComparisonOp comparison = ComparisonOp::EQ;
  BoolOpKind boolOp = BoolOpKind::AND;
  ParameterKind parameterKind = ParameterKind::STRING_NUMBER;

  // Child expressions in slot order.
  std::vector<Expression> operands;
  // Slot names parallel to `operands` (e.g. OPERAND1, TOUCHINGOBJECTMENU).
  std::vector<std::string> operandNames;
  std::map<std::string, Field> fields;

  bool isLiteral() const {
    return kind == ExpressionKind::NumberLiteral ||
           kind == ExpressionKind::StringLiteral ||
           kind == ExpressionKind::BoolLiteral;
  }
};

// ---------------------------------------------------------------------------
// Statements

enum class StatementKind {
  // motion
  MoveSteps, TurnRight, TurnLeft, GoTo, GoToXY, GlideTo, GlideSecsToXY,
  PointInDirection, PointTowards, ChangeXBy, SetX, ChangeYBy, SetY,
  IfOnEdgeBounce, SetRotationStyle,
  // looks
  Say, SayForSecs, Think, ThinkForSecs, SwitchCostumeTo, NextCostume,
  SwitchBackdropTo, SwitchBackdropToAndWait, NextBackdrop, ChangeSizeBy,
  SetSizeTo, ChangeGraphicEffectBy, SetGraphicEffectTo, ClearGraphicEffects,
  Show, Hide, GoToLayer, GoForwardBackwardLayers,
  // sound
  PlaySoundUntilDone, StartSound, StopAllSounds, ChangeSoundEffectBy,
  SetSoundEffectTo, ClearSoundEffects, ChangeVolumeBy, SetVolumeTo,
  // events
  Broadcast, BroadcastAndWait,
  // control
  WaitSeconds, RepeatTimes, Forever, IfThen, IfElse, WaitUntil, RepeatUntil,
  Stop, CreateCloneOf, DeleteThisClone,
  // sensing
  AskAndWait, ResetTimer, SetDragMode,
  // data
  SetVariable, ChangeVariableBy, ShowVariable, HideVariable, AddToList,
  DeleteOfList, DeleteAllOfList, InsertAtList, ReplaceItemOfList, ShowList,
  HideList,
  // pen
  PenDown, PenUp, EraseAll, PenStamp, SetPenColor, ChangePenColorParamBy,
  SetPenColorParamTo, ChangePenSizeBy, SetPenSizeTo,
  // custom blocks
  CallProcedure,
  // forward compatibility; raw opcode preserved
  UnknownOpcode
};

enum class StopTarget { ALL, THIS_SCRIPT, OTHER_SCRIPTS };

struct Statement;

struct StatementList {
  std::vector<Statement> statements;

  bool empty() const;
  std::size_t size() const;
};

struct Statement {
  StatementKind kind = StatementKind::UnknownOpcode;
  std::string opcode;
  std::string blockId;
  std::vector<Expression> inputs;
  std::vector<std::string> inputNames;  // parallel to `inputs`
  std::vector<StatementList> subStacks;  // 0-2; IfElse has 2
  std::map<std::string, Field> fields;

  StopTarget stopTarget = StopTarget::ALL;  // Stop only

  // CallProcedure only.
  std::string proccode;

  // Editor position, pass-through for annotated export.
  double x = 0.0, y = 0.0;
  bool hasPosition = false;

  const Expression* input(const std::string& name) const {
    for (std::size_t i = 0; i < inputNames.size(); ++i)
      if (inputNames[i] == name) return &inputs[i];
    return nullptr;
  }
  const Field* field(const std::string& name) const {
    auto it = fields.find(name);
    return it == fields.end() ? nullptr : &it->second;
  }
};

inline bool StatementList::empty() const { return statements.empty(); }
inline std::size_t StatementList::size() const { return statements.size(); }

// ---------------------------------------------------------------------------
// Scripts and actors

enum class EventKind {
  GreenFlag,
  KeyPressed,
  SpriteClicked,
  BackdropSwitchTo,
  ReceptionOfMessage,
  StartedAsClone,
  GreaterThan,
  NEVER  // loose code, no hat
};

struct Event {
  EventKind kind = EventKind::NEVER;
  std::string key;        // KeyPressed
  std::string name;       // BackdropSwitchTo backdrop / ReceptionOfMessage message
  std::string messageId;  // ReceptionOfMessage
  std::string attribute;  // GreaterThan: LOUDNESS or TIMER
  Expression value;       // GreaterThan threshold

  friend bool operator==(const Event& a, const Event& b) {
    return a.kind == b.kind && a.key == b.key && a.name == b.name &&
           a.attribute == b.attribute;
  }
};

struct Script {
  Event event;
  StatementList body;
  std::string topBlockId;  // hat block id, or first statement id for loose code
  double x = 0.0, y = 0.0;
};

struct ProcedureDefinition {
  std::string proccode;  // signature with %s / %b placeholders
  std::vector<std::pair<std::string, ParameterKind>> parameters;
  StatementList body;
  bool warp = false;
  std::string definitionBlockId;
  std::string prototypeBlockId;
  double x = 0.0, y = 0.0;
};

enum class VariableScope { GLOBAL, LOCAL };

struct VariableDecl {
  std::string id;
  std::string name;
  std::string initialValue;  // literal text form
  VariableScope scope = VariableScope::LOCAL;
};

struct ListDecl {
  std::string id;
  std::string name;
  VariableScope scope = VariableScope::LOCAL;
};

struct ActorDefinition {
  std::string name;
  bool isStage = false;
  std::vector<VariableDecl> variables;
  std::vector<ListDecl> lists;
  std::vector<std::pair<std::string, std::string>> broadcasts;  // (id, name)
  std::vector<Script> scripts;         // block-map encounter order
  std::vector<ProcedureDefinition> procedures;
  std::vector<std::string> costumeNames;
  std::vector<std::string> soundNames;
  int currentCostumeIndex = 0;

  const VariableDecl* variableById(const std::string& id) const {
    for (const auto& v : variables)
      if (v.id == id) return &v;
    return nullptr;
  }
};

struct Program {
  std::string name;
  ActorDefinition stage;
  std::vector<ActorDefinition> sprites;
  std::optional<std::int64_t> projectId;
  std::optional<std::string> sourcePath;
  // Non-fatal oddities noticed while parsing (unknown input codes etc).
  // Tool-side only; carries no project semantics.
  std::vector<std::string> diagnostics;

  // Stage first, then sprites in declaration order.
  std::vector<const ActorDefinition*> actors() const {
    std::vector<const ActorDefinition*> all;
    all.reserve(sprites.size() + 1);
    all.push_back(&stage);
    for (const auto& s : sprites) all.push_back(&s);
    return all;
  }

  const ActorDefinition* actorByName(const std::string& actorName) const {
    if (stage.name == actorName) return &stage;
    for (const auto& s : sprites)
      if (s.name == actorName) return &s;
    return nullptr;
  }

  // Resolves a variable id from the perspective of `actor`: local first,
  // then stage globals.
  const VariableDecl* resolveVariable(const ActorDefinition& actor,
                                      const std::string& id) const {
    if (const auto* v = actor.variableById(id)) return v;
    return stage.variableById(id);
  }
};

// Per-actor asset listing derived from the archive and the JSON declarations.
struct AssetInventory {
  struct ActorAssets {
    std::vector<std::string> costumeNames;
    std::vector<std::string> soundNames;
    // Declared in JSON but the archive has no matching file.
    std::vector<std::string> missingFiles;
  };
  std::map<std::string, ActorAssets> perActor;

  const ActorAssets* forActor(const std::string& name) const {
    auto it = perActor.find(name);
    return it == perActor.end() ? nullptr : &it->second;
  }
};

}  // namespace sb3lint

#endif  // SB3LINT_AST_HPP
