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
// Statement-level control-flow graph over the whole program: one node per
// statement plus synthetic Entry/Exit per script and procedure and a single
// program Start node. Event edges connect the program across scripts
// (broadcasts, clones, backdrop switches); CALL/RETURN edges connect custom
// block calls with their definitions.

#ifndef SB3LINT_CFG_HPP
#define SB3LINT_CFG_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "sb3lint/ast.hpp"

namespace sb3lint {

enum class CfgEdgeKind {
  SEQ,
  BRANCH_TRUE,
  BRANCH_FALSE,
  LOOP_BACK,
  LOOP_EXIT,
  EVENT,
  CALL,
  RETURN
};

const char* cfgEdgeKindName(CfgEdgeKind kind);

enum class CfgNodeKind { Start, Entry, Exit, Statement };

class CfgBuilder;

struct CfgNode {
  CfgNodeKind kind = CfgNodeKind::Statement;
  int id = -1;
  const Statement* statement = nullptr;          // Statement nodes only
  const Script* script = nullptr;                // Entry/Exit of a script
  const ProcedureDefinition* procedure = nullptr;  // Entry/Exit of a procedure
  const ActorDefinition* actor = nullptr;
  std::string label;  // "start", "entry:<top>", "exit:<top>", or the block id
};

struct CfgEdge {
  int from = -1;
  int to = -1;
  CfgEdgeKind kind = CfgEdgeKind::SEQ;
};

// Whether a given handler event can ever fire, and how that was decided.
struct EventStatus {
  const ActorDefinition* actor = nullptr;
  const Script* script = nullptr;
  Event event;
  bool fired = false;
};

class ControlFlowGraph {
 public:
  const std::vector<CfgNode>& nodes() const { return nodes_; }
  const std::vector<CfgEdge>& edges() const { return edges_; }
  int startNode() const { return start_; }

  const std::vector<std::pair<int, CfgEdgeKind>>& successors(int node) const {
    return succ_[node];
  }
  const std::vector<std::pair<int, CfgEdgeKind>>& predecessors(int node) const {
    return pred_[node];
  }

  int nodeForStatement(const Statement* s) const {
    auto it = byStatement_.find(s);
    return it == byStatement_.end() ? -1 : it->second;
  }
  int entryForScript(const Script* s) const {
    auto it = scriptEntry_.find(s);
    return it == scriptEntry_.end() ? -1 : it->second;
  }
  int exitForScript(const Script* s) const {
    auto it = scriptExit_.find(s);
    return it == scriptExit_.end() ? -1 : it->second;
  }
  int entryForProcedure(const ProcedureDefinition* p) const {
    auto it = procEntry_.find(p);
    return it == procEntry_.end() ? -1 : it->second;
  }
  int exitForProcedure(const ProcedureDefinition* p) const {
    auto it = procExit_.find(p);
    return it == procExit_.end() ? -1 : it->second;
  }

  bool hasEdge(int from, int to, CfgEdgeKind kind) const;

  // True when the statement can never pass control to a textual successor
  // (stop all / stop this script / delete this clone).
  static bool isTerminal(const Statement& s);

  // DOT rendering for debugging; node label = opcode + block id.
  std::string toDot() const;

 private:
  friend class CfgBuilder;

  int addNode(CfgNode node);
  void addEdge(int from, int to, CfgEdgeKind kind);

  std::vector<CfgNode> nodes_;
  std::vector<CfgEdge> edges_;
  std::vector<std::vector<std::pair<int, CfgEdgeKind>>> succ_;
  std::vector<std::vector<std::pair<int, CfgEdgeKind>>> pred_;
  int start_ = -1;
  std::unordered_map<const Statement*, int> byStatement_;
  std::unordered_map<const Script*, int> scriptEntry_;
  std::unordered_map<const Script*, int> scriptExit_;
  std::unordered_map<const ProcedureDefinition*, int> procEntry_;
  std::unordered_map<const ProcedureDefinition*, int> procExit_;
};

ControlFlowGraph build_cfg(const Program& program);

// For each handler script in the program: can its event ever fire?
// GreenFlag, key, click and timer/loudness events always can; messages,
// clone starts and backdrop switches need a matching trigger statement.
std::vector<EventStatus> reachable_event_edges(const Program& program);

// Target sprite names a create-clone statement may clone ("_myself_" is
// resolved to the owning sprite); empty means "statically unknown".
std::vector<std::string> cloneTargets(const Statement& s,
                                      const ActorDefinition& owner);

}  // namespace sb3lint

#endif  // SB3LINT_CFG_HPP
