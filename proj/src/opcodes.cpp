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

#include "sb3lint/opcodes.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace sb3lint {

namespace {

const std::unordered_map<std::string_view, StatementKind>& statementTable() {
  static const std::unordered_map<std::string_view, StatementKind> table = {
      {"motion_movesteps", StatementKind::MoveSteps},
      {"motion_turnright", StatementKind::TurnRight},
      {"motion_turnleft", StatementKind::TurnLeft},
      {"motion_goto", StatementKind::GoTo},
      {"motion_gotoxy", StatementKind::GoToXY},
      {"motion_glideto", StatementKind::GlideTo},
      {"motion_glidesecstoxy", StatementKind::GlideSecsToXY},
      {"motion_pointindirection", StatementKind::PointInDirection},
      {"motion_pointtowards", StatementKind::PointTowards},
      {"motion_changexby", StatementKind::ChangeXBy},
      {"motion_setx", StatementKind::SetX},
      {"motion_changeyby", StatementKind::ChangeYBy},
      {"motion_sety", StatementKind::SetY},
      {"motion_ifonedgebounce", StatementKind::IfOnEdgeBounce},
      {"motion_setrotationstyle", StatementKind::SetRotationStyle},
      {"looks_say", StatementKind::Say},
      {"looks_sayforsecs", StatementKind::SayForSecs},
      {"looks_think", StatementKind::Think},
      {"looks_thinkforsecs", StatementKind::ThinkForSecs},
      {"looks_switchcostumeto", StatementKind::SwitchCostumeTo},
      {"looks_nextcostume", StatementKind::NextCostume},
      {"looks_switchbackdropto", StatementKind::SwitchBackdropTo},
      {"looks_switchbackdroptoandwait", StatementKind::SwitchBackdropToAndWait},
      {"looks_nextbackdrop", StatementKind::NextBackdrop},
      {"looks_changesizeby", StatementKind::ChangeSizeBy},
      {"looks_setsizeto", StatementKind::SetSizeTo},
      {"looks_changeeffectby", StatementKind::ChangeGraphicEffectBy},
      {"looks_seteffectto", StatementKind::SetGraphicEffectTo},
      {"looks_cleargraphiceffects", StatementKind::ClearGraphicEffects},
      {"looks_show", StatementKind::Show},
      {"looks_hide", StatementKind::Hide},
      {"looks_gotofrontback", StatementKind::GoToLayer},
      {"looks_goforwardbackwardlayers", StatementKind::GoForwardBackwardLayers},
      {"sound_playuntildone", StatementKind::PlaySoundUntilDone},
      {"sound_play", StatementKind::StartSound},
      {"sound_stopallsounds", StatementKind::StopAllSounds},
      {"sound_changeeffectby", StatementKind::ChangeSoundEffectBy},
      {"sound_seteffectto", StatementKind::SetSoundEffectTo},
      {"sound_cleareffects", StatementKind::ClearSoundEffects},
      {"sound_changevolumeby", StatementKind::ChangeVolumeBy},
      {"sound_setvolumeto", StatementKind::SetVolumeTo},
      {"event_broadcast", StatementKind::Broadcast},
      {"event_broadcastandwait", StatementKind::BroadcastAndWait},
      {"control_wait", StatementKind::WaitSeconds},
      {"control_repeat", StatementKind::RepeatTimes},
      {"control_forever", StatementKind::Forever},
      {"control_if", StatementKind::IfThen},
      {"control_if_else", StatementKind::IfElse},
      {"control_wait_until", StatementKind::WaitUntil},
      {"control_repeat_until", StatementKind::RepeatUntil},
      {"control_stop", StatementKind::Stop},
      {"control_create_clone_of", StatementKind::CreateCloneOf},
      {"control_delete_this_clone", StatementKind::DeleteThisClone},
      {"sensing_askandwait", StatementKind::AskAndWait},
      {"sensing_resettimer", StatementKind::ResetTimer},
      {"sensing_setdragmode", StatementKind::SetDragMode},
      {"data_setvariableto", StatementKind::SetVariable},
      {"data_changevariableby", StatementKind::ChangeVariableBy},
      {"data_showvariable", StatementKind::ShowVariable},
      {"data_hidevariable", StatementKind::HideVariable},
      {"data_addtolist", StatementKind::AddToList},
      {"data_deleteoflist", StatementKind::DeleteOfList},
      {"data_deletealloflist", StatementKind::DeleteAllOfList},
      {"data_insertatlist", StatementKind::InsertAtList},
      {"data_replaceitemoflist", StatementKind::ReplaceItemOfList},
      {"data_showlist", StatementKind::ShowList},
      {"data_hidelist", StatementKind::HideList},
      {"pen_penDown", StatementKind::PenDown},
      {"pen_penUp", StatementKind::PenUp},
      {"pen_clear", StatementKind::EraseAll},
      {"pen_stamp", StatementKind::PenStamp},
      {"pen_setPenColorToColor", StatementKind::SetPenColor},
      {"pen_changePenColorParamBy", StatementKind::ChangePenColorParamBy},
      {"pen_setPenColorParamTo", StatementKind::SetPenColorParamTo},
      {"pen_changePenSizeBy", StatementKind::ChangePenSizeBy},
      {"pen_setPenSizeTo", StatementKind::SetPenSizeTo},
      {"procedures_call", StatementKind::CallProcedure},
  };
  return table;
}

const std::unordered_map<std::string_view, EventKind>& hatTable() {
  static const std::unordered_map<std::string_view, EventKind> table = {
      {"event_whenflagclicked", EventKind::GreenFlag},
      {"event_whenkeypressed", EventKind::KeyPressed},
      {"event_whenthisspriteclicked", EventKind::SpriteClicked},
      {"event_whenstageclicked", EventKind::SpriteClicked},
      {"event_whenbackdropswitchesto", EventKind::BackdropSwitchTo},
      {"event_whenbroadcastreceived", EventKind::ReceptionOfMessage},
      {"control_start_as_clone", EventKind::StartedAsClone},
      {"event_whengreaterthan", EventKind::GreaterThan},
  };
  return table;
}

const std::unordered_set<std::string_view>& booleanReporters() {
  static const std::unordered_set<std::string_view> set = {
      "operator_equals",  "operator_gt",
      "operator_lt",      "operator_and",
      "operator_or",      "operator_not",
      "operator_contains", "sensing_touchingobject",
      "sensing_touchingcolor", "sensing_coloristouchingcolor",
      "sensing_keypressed", "sensing_mousedown",
      "data_listcontainsitem", "argument_reporter_boolean",
  };
  return set;
}

}  // namespace

std::optional<StatementKind> statementKindFor(std::string_view opcode) {
  const auto& table = statementTable();
  auto it = table.find(opcode);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool isHatOpcode(std::string_view opcode) {
  return hatTable().count(opcode) > 0 || opcode == "procedures_definition";
}

std::optional<EventKind> eventKindFor(std::string_view opcode) {
  const auto& table = hatTable();
  auto it = table.find(opcode);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool isBooleanReporterOpcode(std::string_view opcode) {
  return booleanReporters().count(opcode) > 0;
}

bool isBooleanSlot(std::string_view opcode, std::string_view inputName) {
  if (inputName == "CONDITION" || inputName == "CONDITION2") return true;
  if (opcode == "operator_and" || opcode == "operator_or" ||
      opcode == "operator_not") {
    return inputName == "OPERAND1" || inputName == "OPERAND2" ||
           inputName == "OPERAND";
  }
  return false;
}

bool isSensingConditionOpcode(std::string_view opcode) {
  return opcode == "sensing_keypressed" || opcode == "sensing_touchingobject" ||
         opcode == "sensing_touchingcolor" ||
         opcode == "sensing_coloristouchingcolor" ||
         opcode == "sensing_mousedown";
}

bool isPositionReporterOpcode(std::string_view opcode) {
  return opcode == "motion_xposition" || opcode == "motion_yposition" ||
         opcode == "sensing_mousex" || opcode == "sensing_mousey";
}

bool isTimeConsumingStatement(const Statement& s) {
  switch (s.kind) {
    case StatementKind::WaitSeconds:
    case StatementKind::SayForSecs:
    case StatementKind::ThinkForSecs:
    case StatementKind::GlideTo:
    case StatementKind::GlideSecsToXY:
    case StatementKind::BroadcastAndWait:
    case StatementKind::AskAndWait:
      return true;
    default:
      return false;
  }
}

bool isNumericText(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (begin == end) return false;
  std::string trimmed(text.substr(begin, end - begin));
  const char* c = trimmed.c_str();
  char* parsed = nullptr;
  std::strtod(c, &parsed);
  return parsed != nullptr && *parsed == '\0' && parsed != c;
}

}  // namespace sb3lint
