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
// Independent brute-force oracle for the must-defined analysis: exhaustive
// path enumeration with every edge taken at most twice per path, which
// exhausts the meet for a gen-only framework.

#ifndef SB3LINT_TESTS_SUPPORT_ORACLES_HPP
#define SB3LINT_TESTS_SUPPORT_ORACLES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "sb3lint/cfg.hpp"
#include "sb3lint/dataflow.hpp"

namespace testsupport {

class PathOracle {
 public:
  PathOracle(const sb3lint::ControlFlowGraph& cfg, const sb3lint::Program& program)
      : cfg_(cfg), program_(program) {}

  std::map<int, std::set<std::string>> run() {
    std::vector<char> boundary(cfg_.nodes().size(), 0);
    for (const sb3lint::CfgEdge& e : cfg_.edges())
      if (!sb3lint::carriesDataflow(cfg_, e)) boundary[e.to] = 1;
    for (std::size_t i = 0; i < cfg_.nodes().size(); ++i)
      if (boundary[i]) walk(static_cast<int>(i), {}, {});
    return facts_;
  }

 private:
  void walk(int node, std::set<std::string> defined,
            std::map<std::pair<int, int>, int> edgeUse) {
    auto it = facts_.find(node);
    if (it == facts_.end()) {
      facts_[node] = defined;
    } else {
      std::set<std::string> meet;
      std::set_intersection(it->second.begin(), it->second.end(), defined.begin(),
                            defined.end(), std::inserter(meet, meet.begin()));
      it->second = std::move(meet);
    }
    if (!visitedWith_.insert({node, defined}).second) return;

    const sb3lint::CfgNode& n = cfg_.nodes()[node];
    if (n.statement != nullptr && n.actor != nullptr)
      for (const std::string& key :
           sb3lint::absoluteDefinitions(*n.statement, *n.actor, program_))
        defined.insert(key);

    for (const auto& [succ, kind] : cfg_.successors(node)) {
      sb3lint::CfgEdge edge{node, succ, kind};
      if (!sb3lint::carriesDataflow(cfg_, edge)) continue;
      auto use = edgeUse;
      int& count = use[{node, succ}];
      if (count >= 2) continue;
      ++count;
      walk(succ, defined, use);
    }
  }

  const sb3lint::ControlFlowGraph& cfg_;
  const sb3lint::Program& program_;
  std::map<int, std::set<std::string>> facts_;
  std::set<std::pair<int, std::set<std::string>>> visitedWith_;
};

// Compares the worklist analysis against the oracle on every node the
// oracle reaches; returns a description of the first mismatch.
inline std::optional<std::string> dataflowOracleMismatch(
    const sb3lint::Program& program) {
  sb3lint::ControlFlowGraph cfg = sb3lint::build_cfg(program);
  sb3lint::DataflowResult result = sb3lint::definitely_defined(cfg, program);
  auto oracle = PathOracle(cfg, program).run();
  for (const auto& [node, expected] : oracle) {
    std::vector<std::string> actual = result.entrySet(node);
    std::set<std::string> actualSet(actual.begin(), actual.end());
    if (actualSet != expected) {
      return "node " + cfg.nodes()[node].label + ": analysis disagrees with " +
             "path enumeration";
    }
  }
  return std::nullopt;
}

}  // namespace testsupport

#endif  // SB3LINT_TESTS_SUPPORT_ORACLES_HPP
