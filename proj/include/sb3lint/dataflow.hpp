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
// Forward must-analysis over the CFG: which variables and sprite
// attributes are definitely assigned on every execution path reaching a
// node. Scripts fired by the same event run in unspecified order, so facts
// never cross plain event edges; they do follow call/return and the
// synchronous broadcast-and-wait edge.

#ifndef SB3LINT_DATAFLOW_HPP
#define SB3LINT_DATAFLOW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sb3lint/ast.hpp"
#include "sb3lint/cfg.hpp"

namespace sb3lint {

struct DataflowResult {
  std::vector<std::string> names;  // fact index -> key
  std::unordered_map<std::string, int> nameIndex;
  std::size_t wordsPerNode = 0;
  // Entry facts per CFG node, packed 64 per word.
  std::vector<std::uint64_t> bits;

  bool definedOnEntry(int node, const std::string& key) const;
  // Sorted key set for a node; test/debug convenience.
  std::vector<std::string> entrySet(int node) const;
};

// Identity keys for the fact domain.
std::string variableFactKey(const Program& program, const ActorDefinition& actor,
                            const std::string& varId, const std::string& varName);
std::string attributeFactKey(const ActorDefinition& actor, const char* attribute);

// Assignments this statement always performs (set variable, go to x/y,
// point in direction, switch costume, set size, show/hide).
std::vector<std::string> absoluteDefinitions(const Statement& s,
                                             const ActorDefinition& actor,
                                             const Program& program);

// A use of a variable or attribute value: variable reporters in the
// statement's inputs and relative updates (change x by, turn, ...).
struct ReadSite {
  std::string key;
  std::string displayName;
  std::string anchorBlockId;
};
std::vector<ReadSite> statementReads(const Statement& s,
                                     const ActorDefinition& actor,
                                     const Program& program);

// True when facts propagate along this edge.
bool carriesDataflow(const ControlFlowGraph& cfg, const CfgEdge& edge);

// Worklist fixpoint; `shuffleSeed` permutes the initial worklist order
// (the result is order-independent, which the tests verify).
DataflowResult definitely_defined(const ControlFlowGraph& cfg,
                                  const Program& program,
                                  std::optional<unsigned> shuffleSeed = {});

}  // namespace sb3lint

#endif  // SB3LINT_DATAFLOW_HPP
