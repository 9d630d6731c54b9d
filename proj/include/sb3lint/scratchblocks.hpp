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
// Renders scripts in the scratchblocks plain-text syntax
// (scratchblocks.github.io). Lines containing a highlighted block are
// suffixed with an issue marker comment.

#ifndef SB3LINT_SCRATCHBLOCKS_HPP
#define SB3LINT_SCRATCHBLOCKS_HPP

#include <set>
#include <string>

#include "sb3lint/ast.hpp"

namespace sb3lint {

std::string render_scratchblocks(const Script& script,
                                 const std::set<std::string>& highlightBlockIds = {});

std::string render_scratchblocks(const ProcedureDefinition& procedure,
                                 const std::set<std::string>& highlightBlockIds = {});

}  // namespace sb3lint

#endif  // SB3LINT_SCRATCHBLOCKS_HPP
