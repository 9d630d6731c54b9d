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
// Deterministic depth-first pre-order traversal over a Program. Nodes carry
// their most specific kind; the hooks below subscribe at the "any
// statement" / "any expression" abstraction level, and visitors switch on
// the node kind where they need more.

#ifndef SB3LINT_VISITOR_HPP
#define SB3LINT_VISITOR_HPP

#include <string>
#include <vector>

#include "sb3lint/ast.hpp"

namespace sb3lint {

class AstVisitor {
 public:
  virtual ~AstVisitor() = default;

  virtual void enterActor(const ActorDefinition&) {}
  virtual void leaveActor(const ActorDefinition&) {}
  virtual void enterScript(const Script&) {}
  virtual void leaveScript(const Script&) {}
  virtual void enterProcedure(const ProcedureDefinition&) {}
  virtual void leaveProcedure(const ProcedureDefinition&) {}
  virtual void enterStatement(const Statement&) {}
  virtual void leaveStatement(const Statement&) {}
  virtual void visitExpression(const Expression&) {}
};

// Order: stage, sprites in declaration order; per actor scripts then
// procedures; per statement its inputs (pre-order through operands), then
// its substacks. Identical across runs for the same Program.
void traverse(const Program& program, AstVisitor& visitor);

// Visitor base that tracks where the walk currently is. Finders derive
// from this to know the owning actor/script and the nearest block id when
// they look at expressions without one.
class ContextVisitor : public AstVisitor {
 public:
  void enterActor(const ActorDefinition& actor) override { actor_ = &actor; }
  void leaveActor(const ActorDefinition&) override { actor_ = nullptr; }
  void enterScript(const Script& script) override { script_ = &script; }
  void leaveScript(const Script&) override { script_ = nullptr; }
  void enterProcedure(const ProcedureDefinition& proc) override { procedure_ = &proc; }
  void leaveProcedure(const ProcedureDefinition&) override { procedure_ = nullptr; }
  void enterStatement(const Statement& s) override { statements_.push_back(&s); }
  void leaveStatement(const Statement&) override { statements_.pop_back(); }

  const ActorDefinition* currentActor() const { return actor_; }
  const Script* currentScript() const { return script_; }
  const ProcedureDefinition* currentProcedure() const { return procedure_; }
  const Statement* currentStatement() const {
    return statements_.empty() ? nullptr : statements_.back();
  }
  const std::vector<const Statement*>& statementStack() const {
    return statements_;
  }
  // Top block id of the current script or procedure.
  std::string currentTopBlockId() const {
    if (script_) return script_->topBlockId;
    if (procedure_) return procedure_->definitionBlockId;
    return {};
  }

 private:
  const ActorDefinition* actor_ = nullptr;
  const Script* script_ = nullptr;
  const ProcedureDefinition* procedure_ = nullptr;
  std::vector<const Statement*> statements_;
};

// Nearest enclosing block id for an expression: its own when present,
// otherwise the id of the statement (or expression) that contains it.
// traverse() keeps this stack up to date; see anchoredExpressionWalk.
struct AnchoredExpression {
  const Expression* expression;
  std::string anchorBlockId;
};

// Flattens all expressions of a statement in visit order, each paired with
// its anchor block id (the statement's id when the expression has none).
std::vector<AnchoredExpression> anchoredExpressions(const Statement& statement);

}  // namespace sb3lint

#endif  // SB3LINT_VISITOR_HPP
