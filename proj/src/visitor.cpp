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

#include "sb3lint/visitor.hpp"

namespace sb3lint {

namespace {

void walkExpression(const Expression& e, AstVisitor& visitor) {
  visitor.visitExpression(e);
  for (const Expression& operand : e.operands) walkExpression(operand, visitor);
}

void walkStatementList(const StatementList& list, AstVisitor& visitor) {
  for (const Statement& s : list.statements) {
    visitor.enterStatement(s);
    for (const Expression& input : s.inputs) walkExpression(input, visitor);
    for (const StatementList& sub : s.subStacks) walkStatementList(sub, visitor);
    visitor.leaveStatement(s);
  }
}

void collectAnchored(const Expression& e, const std::string& parentAnchor,
                     std::vector<AnchoredExpression>& out) {
  const std::string& anchor = e.blockId.empty() ? parentAnchor : e.blockId;
  out.push_back({&e, anchor});
  for (const Expression& operand : e.operands)
    collectAnchored(operand, anchor, out);
}

}  // namespace

void traverse(const Program& program, AstVisitor& visitor) {
  for (const ActorDefinition* actor : program.actors()) {
    visitor.enterActor(*actor);
    for (const Script& script : actor->scripts) {
      visitor.enterScript(script);
      walkStatementList(script.body, visitor);
      visitor.leaveScript(script);
    }
    for (const ProcedureDefinition& proc : actor->procedures) {
      visitor.enterProcedure(proc);
      walkStatementList(proc.body, visitor);
      visitor.leaveProcedure(proc);
    }
    visitor.leaveActor(*actor);
  }
}

std::vector<AnchoredExpression> anchoredExpressions(const Statement& statement) {
  std::vector<AnchoredExpression> out;
  for (const Expression& input : statement.inputs)
    collectAnchored(input, statement.blockId, out);
  return out;
}

}  // namespace sb3lint
