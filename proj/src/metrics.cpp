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

#include "sb3lint/metrics.hpp"

#include <sstream>

namespace sb3lint {

namespace {

std::int64_t countExpressionBlocks(const Expression& e) {
  std::int64_t n = e.blockId.empty() ? 0 : 1;
  for (const Expression& operand : e.operands) n += countExpressionBlocks(operand);
  return n;
}

std::int64_t countDecisionExpressions(const Expression& e) {
  std::int64_t n = e.kind == ExpressionKind::BoolOp ? 1 : 0;
  for (const Expression& operand : e.operands) n += countDecisionExpressions(operand);
  return n;
}

struct BodyCounts {
  std::int64_t blocks = 0;     // statements + reporter blocks
  std::int64_t decisions = 0;  // decision points
};

BodyCounts countBody(const StatementList& list) {
  BodyCounts counts;
  for (const Statement& s : list.statements) {
    ++counts.blocks;
    switch (s.kind) {
      case StatementKind::IfThen:
      case StatementKind::IfElse:
      case StatementKind::RepeatUntil:
      case StatementKind::WaitUntil:
        ++counts.decisions;
        break;
      default:
        break;
    }
    for (const Expression& input : s.inputs) {
      counts.blocks += countExpressionBlocks(input);
      counts.decisions += countDecisionExpressions(input);
    }
    for (const StatementList& sub : s.subStacks) {
      BodyCounts inner = countBody(sub);
      counts.blocks += inner.blocks;
      counts.decisions += inner.decisions;
    }
  }
  return counts;
}

std::string formatDouble(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace

MetricsRecord compute_metrics(const Program& program) {
  MetricsRecord record;
  record.spriteCount = static_cast<std::int64_t>(program.sprites.size());
  std::int64_t complexitySum = 0;

  for (const ActorDefinition* actor : program.actors()) {
    for (const Script& script : actor->scripts) {
      BodyCounts counts = countBody(script.body);
      if (script.event.kind == EventKind::NEVER) {
        ++record.looseScriptCount;
        record.blockCount += counts.blocks;
      } else {
        ++record.scriptCount;
        record.blockCount += counts.blocks + 1;  // the hat
        complexitySum += 1 + counts.decisions;
      }
    }
    for (const ProcedureDefinition& proc : actor->procedures) {
      ++record.procedureCount;
      BodyCounts counts = countBody(proc.body);
      record.blockCount += counts.blocks + 1;  // the definition hat
      complexitySum += 1 + counts.decisions;
    }
  }

  std::int64_t units = record.scriptCount + record.procedureCount;
  record.weightedMeanComplexity =
      units == 0 ? 0.0 : static_cast<double>(complexitySum) / static_cast<double>(units);
  return record;
}

const std::vector<std::string>& metricsColumns() {
  static const std::vector<std::string> columns = {
      "blockCount",     "scriptCount",      "spriteCount",
      "procedureCount", "looseScriptCount", "weightedMeanComplexity"};
  return columns;
}

std::vector<std::string> metricsValues(const MetricsRecord& r) {
  return {std::to_string(r.blockCount),
          std::to_string(r.scriptCount),
          std::to_string(r.spriteCount),
          std::to_string(r.procedureCount),
          std::to_string(r.looseScriptCount),
          formatDouble(r.weightedMeanComplexity)};
}

}  // namespace sb3lint
