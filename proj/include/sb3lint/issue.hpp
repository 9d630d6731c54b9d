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

#ifndef SB3LINT_ISSUE_HPP
#define SB3LINT_ISSUE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sb3lint {

enum class IssueCategory { SYNTAX_ERROR, SCRATCH_BUG, GENERAL_BUG, CODE_SMELL };
enum class Severity { BUG, SMELL };

const char* categoryName(IssueCategory category);
const char* severityName(Severity severity);

// Syntax errors, Scratch-specific bugs and general bugs are bugs; code
// smells are smells.
Severity severityFor(IssueCategory category);

struct Issue {
  std::string finderId;
  IssueCategory category = IssueCategory::CODE_SMELL;
  Severity severity = Severity::SMELL;
  std::string actorName;
  std::string scriptTopBlockId;        // empty when no owning script
  std::vector<std::string> blockIds;   // offending blocks; may be empty only
                                       // for project/actor-level findings
  std::string hintKey;
  std::map<std::string, std::string> hintParams;
};

// Stable report order: category, finder, actor, blocks.
bool issueLess(const Issue& a, const Issue& b);

struct FinderConfig {
  // Empty set = all finders enabled.
  std::set<std::string> enabledFinderIds;
  bool ignoreLooseBlocks = false;
  int longScriptThreshold = 12;
};

}  // namespace sb3lint

#endif  // SB3LINT_ISSUE_HPP
