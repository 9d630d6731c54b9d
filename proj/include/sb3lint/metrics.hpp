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

#ifndef SB3LINT_METRICS_HPP
#define SB3LINT_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sb3lint/ast.hpp"

namespace sb3lint {

struct MetricsRecord {
  std::int64_t blockCount = 0;       // hats + statements + reporters with ids
  std::int64_t scriptCount = 0;      // scripts with a hat
  std::int64_t spriteCount = 0;
  std::int64_t procedureCount = 0;
  std::int64_t looseScriptCount = 0;
  double weightedMeanComplexity = 0.0;
};

// Complexity of one script or procedure body: 1 + decision points, where
// decision points are if, if-else, repeat-until, wait-until and every
// boolean operator node. The weighted mean averages over hat scripts and
// procedures; loose code counts toward blockCount only.
MetricsRecord compute_metrics(const Program& program);

// Column names for CSV output, in emission order.
const std::vector<std::string>& metricsColumns();
std::vector<std::string> metricsValues(const MetricsRecord& record);

}  // namespace sb3lint

#endif  // SB3LINT_METRICS_HPP
