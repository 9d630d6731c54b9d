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

#ifndef SB3LINT_OPCODES_HPP
#define SB3LINT_OPCODES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "sb3lint/ast.hpp"

namespace sb3lint {

// Statement opcode -> kind; nullopt when the opcode is not a known
// standard-palette stack block.
std::optional<StatementKind> statementKindFor(std::string_view opcode);

// Hat opcodes start scripts.
bool isHatOpcode(std::string_view opcode);

// event_whenbroadcastreceived etc. -> EventKind (hat opcodes only).
std::optional<EventKind> eventKindFor(std::string_view opcode);

// True for pointed (boolean) reporter opcodes.
bool isBooleanReporterOpcode(std::string_view opcode);

// True if input slot `inputName` on `opcode` expects a boolean expression.
bool isBooleanSlot(std::string_view opcode, std::string_view inputName);

// Sensing reporters that observe the live environment (key pressed,
// touching, mouse down); used by the loop-sensing rules.
bool isSensingConditionOpcode(std::string_view opcode);

// Reporters for exact coordinates (sprite position, mouse position).
bool isPositionReporterOpcode(std::string_view opcode);

// Statements that consume noticeable wall-clock time.
bool isTimeConsumingStatement(const Statement& s);

// Full-string numeric literal check, Scratch-style (optional sign,
// decimal point, exponent; surrounding whitespace tolerated).
bool isNumericText(std::string_view text);

}  // namespace sb3lint

#endif  // SB3LINT_OPCODES_HPP
