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

#include "sb3lint/scratchblocks.hpp"

#include <sstream>
#include <unordered_map>

#include "sb3lint/opcodes.hpp"

namespace sb3lint {

namespace {

// Statement patterns. {NAME} renders the input expression, {NAME:v} renders
// a folded menu literal as a round dropdown, {f:NAME} a field as a square
// dropdown, {f:NAME:r} a field as a round dropdown.
const std::unordered_map<std::string_view, std::string_view>& statementPatterns() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"motion_movesteps", "move {STEPS} steps"},
      {"motion_turnright", "turn right {DEGREES} degrees"},
      {"motion_turnleft", "turn left {DEGREES} degrees"},
      {"motion_goto", "go to {TO:v}"},
      {"motion_gotoxy", "go to x: {X} y: {Y}"},
      {"motion_glideto", "glide {SECS} secs to {TO:v}"},
      {"motion_glidesecstoxy", "glide {SECS} secs to x: {X} y: {Y}"},
      {"motion_pointindirection", "point in direction {DIRECTION}"},
      {"motion_pointtowards", "point towards {TOWARDS:v}"},
      {"motion_changexby", "change x by {DX}"},
      {"motion_setx", "set x to {X}"},
      {"motion_changeyby", "change y by {DY}"},
      {"motion_sety", "set y to {Y}"},
      {"motion_ifonedgebounce", "if on edge, bounce"},
      {"motion_setrotationstyle", "set rotation style {f:STYLE}"},
      {"looks_say", "say {MESSAGE}"},
      {"looks_sayforsecs", "say {MESSAGE} for {SECS} seconds"},
      {"looks_think", "think {MESSAGE}"},
      {"looks_thinkforsecs", "think {MESSAGE} for {SECS} seconds"},
      {"looks_switchcostumeto", "switch costume to {COSTUME:v}"},
      {"looks_nextcostume", "next costume"},
      {"looks_switchbackdropto", "switch backdrop to {BACKDROP:v}"},
      {"looks_switchbackdroptoandwait", "switch backdrop to {BACKDROP:v} and wait"},
      {"looks_nextbackdrop", "next backdrop"},
      {"looks_changesizeby", "change size by {CHANGE}"},
      {"looks_setsizeto", "set size to {SIZE} %"},
      {"looks_changeeffectby", "change {f:EFFECT} effect by {CHANGE}"},
      {"looks_seteffectto", "set {f:EFFECT} effect to {VALUE}"},
      {"looks_cleargraphiceffects", "clear graphic effects"},
      {"looks_show", "show"},
      {"looks_hide", "hide"},
      {"looks_gotofrontback", "go to {f:FRONT_BACK} layer"},
      {"looks_goforwardbackwardlayers", "go {f:FORWARD_BACKWARD} {NUM} layers"},
      {"sound_playuntildone", "play sound {SOUND_MENU:v} until done"},
      {"sound_play", "start sound {SOUND_MENU:v}"},
      {"sound_stopallsounds", "stop all sounds"},
      {"sound_changeeffectby", "change {f:EFFECT} effect by {VALUE}"},
      {"sound_seteffectto", "set {f:EFFECT} effect to {VALUE}"},
      {"sound_cleareffects", "clear sound effects"},
      {"sound_changevolumeby", "change volume by {VOLUME}"},
      {"sound_setvolumeto", "set volume to {VOLUME} %"},
      {"event_broadcast", "broadcast {BROADCAST_INPUT:v}"},
      {"event_broadcastandwait", "broadcast {BROADCAST_INPUT:v} and wait"},
      {"control_wait", "wait {DURATION} seconds"},
      {"control_wait_until", "wait until {CONDITION}"},
      {"control_stop", "stop {f:STOP_OPTION}"},
      {"control_create_clone_of", "create clone of {CLONE_OPTION:v}"},
      {"control_delete_this_clone", "delete this clone"},
      {"sensing_askandwait", "ask {QUESTION} and wait"},
      {"sensing_resettimer", "reset timer"},
      {"sensing_setdragmode", "set drag mode {f:DRAG_MODE}"},
      {"data_setvariableto", "set {f:VARIABLE} to {VALUE}"},
      {"data_changevariableby", "change {f:VARIABLE} by {VALUE}"},
      {"data_showvariable", "show variable {f:VARIABLE}"},
      {"data_hidevariable", "hide variable {f:VARIABLE}"},
      {"data_addtolist", "add {ITEM} to {f:LIST}"},
      {"data_deleteoflist", "delete {INDEX} of {f:LIST}"},
      {"data_deletealloflist", "delete all of {f:LIST}"},
      {"data_insertatlist", "insert {ITEM} at {INDEX} of {f:LIST}"},
      {"data_replaceitemoflist", "replace item {INDEX} of {f:LIST} with {ITEM}"},
      {"data_showlist", "show list {f:LIST}"},
      {"data_hidelist", "hide list {f:LIST}"},
      {"pen_penDown", "pen down"},
      {"pen_penUp", "pen up"},
      {"pen_clear", "erase all"},
      {"pen_stamp", "stamp"},
      {"pen_setPenColorToColor", "set pen color to {COLOR}"},
      {"pen_changePenColorParamBy", "change pen {COLOR_PARAM:v} by {VALUE}"},
      {"pen_setPenColorParamTo", "set pen {COLOR_PARAM:v} to {VALUE}"},
      {"pen_changePenSizeBy", "change pen size by {SIZE}"},
      {"pen_setPenSizeTo", "set pen size to {SIZE}"},
  };
  return table;
}

const std::unordered_map<std::string_view, std::string_view>& reporterPatterns() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"operator_add", "{NUM1} + {NUM2}"},
      {"operator_subtract", "{NUM1} - {NUM2}"},
      {"operator_multiply", "{NUM1} * {NUM2}"},
      {"operator_divide", "{NUM1} / {NUM2}"},
      {"operator_mod", "{NUM1} mod {NUM2}"},
      {"operator_random", "pick random {FROM} to {TO}"},
      {"operator_join", "join {STRING1} {STRING2}"},
      {"operator_letter_of", "letter {LETTER} of {STRING}"},
      {"operator_length", "length of {STRING}"},
      {"operator_round", "round {NUM}"},
      {"operator_mathop", "{f:OPERATOR} of {NUM}"},
      {"operator_contains", "{STRING1} contains {STRING2}?"},
      {"operator_equals", "{OPERAND1} = {OPERAND2}"},
      {"operator_lt", "{OPERAND1} < {OPERAND2}"},
      {"operator_gt", "{OPERAND1} > {OPERAND2}"},
      {"operator_and", "{OPERAND1} and {OPERAND2}"},
      {"operator_or", "{OPERAND1} or {OPERAND2}"},
      {"operator_not", "not {OPERAND}"},
      {"motion_xposition", "x position"},
      {"motion_yposition", "y position"},
      {"motion_direction", "direction"},
      {"looks_costumenumbername", "costume {f:NUMBER_NAME:r}"},
      {"looks_backdropnumbername", "backdrop {f:NUMBER_NAME:r}"},
      {"looks_size", "size"},
      {"sound_volume", "volume"},
      {"sensing_touchingobject", "touching {TOUCHINGOBJECTMENU:v} ?"},
      {"sensing_touchingcolor", "touching color {COLOR} ?"},
      {"sensing_coloristouchingcolor", "color {COLOR} is touching {COLOR2} ?"},
      {"sensing_distanceto", "distance to {DISTANCETOMENU:v}"},
      {"sensing_answer", "answer"},
      {"sensing_keypressed", "key {KEY_OPTION:v} pressed?"},
      {"sensing_mousedown", "mouse down?"},
      {"sensing_mousex", "mouse x"},
      {"sensing_mousey", "mouse y"},
      {"sensing_loudness", "loudness"},
      {"sensing_timer", "timer"},
      {"sensing_of", "{f:PROPERTY} of {OBJECT:v}"},
      {"sensing_current", "current {f:CURRENTMENU:r}"},
      {"sensing_dayssince2000", "days since 2000"},
      {"sensing_username", "username"},
      {"data_itemoflist", "item {INDEX} of {f:LIST}"},
      {"data_itemnumoflist", "item # of {ITEM} in {f:LIST}"},
      {"data_lengthoflist", "length of {f:LIST}"},
      {"data_listcontainsitem", "{f:LIST} contains {ITEM}?"},
  };
  return table;
}

class Renderer {
 public:
  explicit Renderer(const std::set<std::string>& highlight) : highlight_(highlight) {}

  std::string renderScript(const Script& script) {
    lines_.clear();
    if (script.event.kind != EventKind::NEVER) emitHat(script);
    renderList(script.body);
    return join();
  }

  std::string renderProcedure(const ProcedureDefinition& proc) {
    lines_.clear();
    beginLine(proc.definitionBlockId);
    line_ << "define " << substituteProccode(proc);
    endLine();
    renderList(proc.body);
    return join();
  }

 private:
  void emitHat(const Script& script) {
    beginLine(script.topBlockId);
    switch (script.event.kind) {
      case EventKind::GreenFlag:
        line_ << "when green flag clicked";
        break;
      case EventKind::KeyPressed:
        line_ << "when [" << script.event.key << " v] key pressed";
        break;
      case EventKind::SpriteClicked:
        line_ << "when this sprite clicked";
        break;
      case EventKind::BackdropSwitchTo:
        line_ << "when backdrop switches to [" << script.event.name << " v]";
        break;
      case EventKind::ReceptionOfMessage:
        line_ << "when I receive [" << script.event.name << " v]";
        break;
      case EventKind::StartedAsClone:
        line_ << "when I start as a clone";
        break;
      case EventKind::GreaterThan:
        line_ << "when [" << script.event.attribute << " v] > "
              << renderExpression(script.event.value);
        break;
      case EventKind::NEVER:
        break;
    }
    endLine();
  }

  void renderList(const StatementList& list) {
    for (const Statement& s : list.statements) renderStatement(s);
  }

  void renderStatement(const Statement& s) {
    switch (s.kind) {
      case StatementKind::Forever:
        emitSimple(s, "forever");
        renderList(s.subStacks[0]);
        emitPlain("end");
        return;
      case StatementKind::RepeatTimes:
        emitPattern(s, "repeat {TIMES}");
        renderList(s.subStacks[0]);
        emitPlain("end");
        return;
      case StatementKind::RepeatUntil:
        emitPattern(s, "repeat until {CONDITION}");
        renderList(s.subStacks[0]);
        emitPlain("end");
        return;
      case StatementKind::IfThen:
        emitPattern(s, "if {CONDITION} then");
        renderList(s.subStacks[0]);
        emitPlain("end");
        return;
      case StatementKind::IfElse:
        emitPattern(s, "if {CONDITION} then");
        renderList(s.subStacks[0]);
        emitPlain("else");
        renderList(s.subStacks[1]);
        emitPlain("end");
        return;
      case StatementKind::CallProcedure: {
        beginLine(s.blockId);
        line_ << substituteCall(s) << " :: custom";
        endLine();
        return;
      }
      case StatementKind::UnknownOpcode:
        emitSimple(s, "... :: grey");
        return;
      default: {
        auto it = statementPatterns().find(s.opcode);
        if (it != statementPatterns().end()) {
          emitPattern(s, it->second);
        } else {
          emitSimple(s, "... :: grey");
        }
        return;
      }
    }
  }

  void emitPlain(const char* text) {
    beginLine("");
    line_ << text;
    endLine();
  }

  void emitSimple(const Statement& s, const char* text) {
    beginLine(s.blockId);
    line_ << text;
    endLine();
  }

  void emitPattern(const Statement& s, std::string_view pattern) {
    beginLine(s.blockId);
    line_ << expandPattern(pattern, s.inputNames, s.inputs, s.fields);
    endLine();
  }

  std::string expandPattern(std::string_view pattern,
                            const std::vector<std::string>& inputNames,
                            const std::vector<Expression>& inputs,
                            const std::map<std::string, Field>& fields) {
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] != '{') {
        out += pattern[i];
        continue;
      }
      std::size_t close = pattern.find('}', i);
      if (close == std::string_view::npos) {
        out += pattern[i];
        continue;
      }
      std::string token(pattern.substr(i + 1, close - i - 1));
      i = close;

      if (token.rfind("f:", 0) == 0) {
        bool round = false;
        std::string name = token.substr(2);
        if (name.size() > 2 && name.compare(name.size() - 2, 2, ":r") == 0) {
          round = true;
          name = name.substr(0, name.size() - 2);
        }
        auto field = fields.find(name);
        std::string value = field != fields.end() ? field->second.value : "";
        out += round ? "(" + value + " v)" : "[" + value + " v]";
        continue;
      }

      bool asMenu = false;
      std::string name = token;
      if (name.size() > 2 && name.compare(name.size() - 2, 2, ":v") == 0) {
        asMenu = true;
        name = name.substr(0, name.size() - 2);
      }
      const Expression* input = nullptr;
      for (std::size_t k = 0; k < inputNames.size(); ++k)
        if (inputNames[k] == name) input = &inputs[k];
      if (input == nullptr) {
        out += asMenu ? "( v)" : "()";
        continue;
      }
      if (asMenu && (input->kind == ExpressionKind::StringLiteral ||
                     input->kind == ExpressionKind::BroadcastRef)) {
        out += "(" + input->text + " v)";
        noteBlock(input->blockId);
        continue;
      }
      out += renderExpression(*input);
    }
    return out;
  }

  std::string numberText(const Expression& e) {
    if (!e.text.empty()) return e.text;
    std::ostringstream num;
    num << e.number;
    return num.str();
  }

  bool rendersPointed(const Expression& e) {
    switch (e.kind) {
      case ExpressionKind::Comparison:
      case ExpressionKind::BoolOp:
      case ExpressionKind::EmptyBool:
        return true;
      case ExpressionKind::ParameterRef:
        return e.parameterKind == ParameterKind::BOOLEAN;
      case ExpressionKind::Reporter:
        return isBooleanReporterOpcode(e.opcode);
      default:
        return false;
    }
  }

  std::string renderExpression(const Expression& e) {
    noteBlock(e.blockId);
    switch (e.kind) {
      case ExpressionKind::NumberLiteral:
        return "(" + numberText(e) + ")";
      case ExpressionKind::StringLiteral:
        return "[" + e.text + "]";
      case ExpressionKind::BoolLiteral:
        return e.boolValue ? "<true>" : "<false>";
      case ExpressionKind::ColorLiteral:
        return "[" + e.text + "]";
      case ExpressionKind::VariableRef:
      case ExpressionKind::ListRef:
        return "(" + e.text + ")";
      case ExpressionKind::BroadcastRef:
        return "(" + e.text + " v)";
      case ExpressionKind::ParameterRef:
        return rendersPointed(e) ? "<" + e.text + ">" : "(" + e.text + ")";
      case ExpressionKind::Answer:
        return "(answer)";
      case ExpressionKind::EmptyBool:
        return "<>";
      case ExpressionKind::EmptyNumber:
        return "()";
      case ExpressionKind::Comparison:
      case ExpressionKind::BoolOp:
      case ExpressionKind::Reporter: {
        auto it = reporterPatterns().find(e.opcode);
        std::string body;
        if (it != reporterPatterns().end()) {
          body = expandPattern(it->second, e.operandNames, e.operands, e.fields);
        } else {
          body = "... :: grey";
        }
        return rendersPointed(e) ? "<" + body + ">" : "(" + body + ")";
      }
    }
    return "()";
  }

  std::string substituteCall(const Statement& s) {
    std::string out;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < s.proccode.size(); ++i) {
      char c = s.proccode[i];
      if (c == '%' && i + 1 < s.proccode.size() &&
          (s.proccode[i + 1] == 's' || s.proccode[i + 1] == 'n' ||
           s.proccode[i + 1] == 'b')) {
        out += arg < s.inputs.size()
                   ? renderExpression(s.inputs[arg])
                   : (s.proccode[i + 1] == 'b' ? "<>" : "()");
        ++arg;
        ++i;
      } else {
        out += c;
      }
    }
    return out;
  }

  std::string substituteProccode(const ProcedureDefinition& proc) {
    std::string out;
    std::size_t param = 0;
    for (std::size_t i = 0; i < proc.proccode.size(); ++i) {
      char c = proc.proccode[i];
      if (c == '%' && i + 1 < proc.proccode.size() &&
          (proc.proccode[i + 1] == 's' || proc.proccode[i + 1] == 'n' ||
           proc.proccode[i + 1] == 'b')) {
        std::string name = param < proc.parameters.size()
                               ? proc.parameters[param].first
                               : "";
        out += proc.proccode[i + 1] == 'b' ? "<" + name + ">" : "(" + name + ")";
        ++param;
        ++i;
      } else {
        out += c;
      }
    }
    return out;
  }

  void beginLine(const std::string& blockId) {
    line_.str("");
    lineBlocks_.clear();
    noteBlock(blockId);
  }

  void noteBlock(const std::string& blockId) {
    if (!blockId.empty()) lineBlocks_.insert(blockId);
  }

  void endLine() {
    bool marked = false;
    for (const std::string& id : lineBlocks_)
      if (highlight_.count(id) > 0) marked = true;
    std::string text = line_.str();
    if (marked) text += " // <- ISSUE";
    lines_.push_back(std::move(text));
  }

  std::string join() const {
    std::string out;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      out += lines_[i];
      if (i + 1 < lines_.size()) out += '\n';
    }
    return out;
  }

  const std::set<std::string>& highlight_;
  std::vector<std::string> lines_;
  std::ostringstream line_;
  std::set<std::string> lineBlocks_;
};

}  // namespace

std::string render_scratchblocks(const Script& script,
                                 const std::set<std::string>& highlightBlockIds) {
  return Renderer(highlightBlockIds).renderScript(script);
}

std::string render_scratchblocks(const ProcedureDefinition& procedure,
                                 const std::set<std::string>& highlightBlockIds) {
  return Renderer(highlightBlockIds).renderProcedure(procedure);
}

}  // namespace sb3lint
