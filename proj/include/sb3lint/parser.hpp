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

#ifndef SB3LINT_PARSER_HPP
#define SB3LINT_PARSER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sb3lint/ast.hpp"

namespace sb3lint {

// Parses a project.json document into a fully linked Program. Tolerant by
// construction: unknown opcodes become UnknownOpcode nodes, missing optional
// fields degrade to defaults. Throws MalformedProject only for a missing
// `targets` array, a missing stage target, or a cyclic `next` chain.
Program parse_project(std::string_view jsonText, std::string name = "project");

// Same, plus an asset inventory derived from the JSON declarations alone
// (no archive to check files against, so nothing is reported missing).
std::pair<Program, AssetInventory> parse_project_with_assets(
    std::string_view jsonText, std::string name = "project");

// Unpacks a .sb3 archive: parse_project on the project.json entry plus an
// AssetInventory that flags declared-but-absent asset files.
// Throws NotAnArchive / NoProjectJson.
std::pair<Program, AssetInventory> load_sb3(
    const std::vector<std::uint8_t>& archiveBytes, std::string name = "project");

// Decodes one raw input value as it appears in a block's `inputs` map.
// `blocksJson` supplies referenced reporter blocks; `booleanSlot` selects
// the empty-slot kind for unfilled inputs.
Expression decode_input(std::string_view rawInputJson,
                        std::string_view blocksJson = "{}",
                        bool booleanSlot = false);

}  // namespace sb3lint

#endif  // SB3LINT_PARSER_HPP
