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

#include "sb3lint/cfg.hpp"

#include <sstream>

namespace sb3lint {

namespace {

// A create-clone target taken from the folded menu literal.
std::string cloneTargetLiteral(const Statement& s) {
  const Expression* option = s.input("CLONE_OPTION");
  if (option != nullptr && option->kind == ExpressionKind::StringLiteral)
    return option->text;
  return "";
}

std::string backdropTargetLiteral(const Statement& s) {
  const Expression* backdrop = s.input("BACKDROP");
  if (backdrop != nullptr && backdrop->kind == ExpressionKind::StringLiteral)
    return backdrop->text;
  return "";
}

bool isBackdropSpecial(const std::string& name) {
  return name == "next backdrop" || name == "previous backdrop" ||
         name == "random backdrop";
}

struct Trigger {
  const Statement* statement = nullptr;
  const ActorDefinition* actor = nullptr;
};

struct Triggers {
  // Broadcast and broadcast-and-wait statements with message identity.
  std::vector<std::pair<Trigger, std::pair<std::string, std::string>>> broadcasts;
  // Create-clone statements with resolved target names (empty = unknown).
  std::vector<std::pair<Trigger, std::vector<std::string>>> clones;
  // Backdrop switches with the literal target ("" = unknown / special).
  std::vector<std::pair<Trigger, std::string>> backdropSwitches;
};

void collectFromList(const StatementList& list, const ActorDefinition& actor,
                     Triggers& out) {
  for (const Statement& s : list.statements) {
    switch (s.kind) {
      case StatementKind::Broadcast:
      case StatementKind::BroadcastAndWait: {
        std::string id, name;
        if (const Expression* msg = s.input("BROADCAST_INPUT")) {
          if (msg->kind == ExpressionKind::BroadcastRef) {
            id = msg->refId;
            name = msg->text;
          } else if (msg->kind == ExpressionKind::StringLiteral) {
            name = msg->text;
          }
        }
        out.broadcasts.push_back({{&s, &actor}, {id, name}});
        break;
      }
      case StatementKind::CreateCloneOf:
        out.clones.push_back({{&s, &actor}, cloneTargets(s, actor)});
        break;
      case StatementKind::SwitchBackdropTo:
      case StatementKind::SwitchBackdropToAndWait: {
        // "next backdrop" and friends may land anywhere.
        std::string target = backdropTargetLiteral(s);
        if (isBackdropSpecial(target)) target.clear();
        out.backdropSwitches.push_back({{&s, &actor}, target});
        break;
      }
      case StatementKind::NextBackdrop:
        out.backdropSwitches.push_back({{&s, &actor}, ""});
        break;
      default:
        break;
    }
    for (const StatementList& sub : s.subStacks) collectFromList(sub, actor, out);
  }
}

Triggers collectTriggers(const Program& program) {
  Triggers triggers;
  for (const ActorDefinition* actor : program.actors()) {
    for (const Script& script : actor->scripts)
      collectFromList(script.body, *actor, triggers);
    for (const ProcedureDefinition& proc : actor->procedures)
      collectFromList(proc.body, *actor, triggers);
  }
  return triggers;
}

bool messageMatches(const std::string& broadcastId,
                    const std::string& broadcastName, const Event& reception) {
  if (!broadcastId.empty() && !reception.messageId.empty())
    return broadcastId == reception.messageId;
  return broadcastName == reception.name;
}

}  // namespace

class CfgBuilder {
 public:
  explicit CfgBuilder(const Program& program) : program_(program) {}

  ControlFlowGraph build() {
    CfgNode start;
    start.kind = CfgNodeKind::Start;
    start.label = "start";
    g_.start_ = g_.addNode(start);

    // Nodes first, so calls and events can reference entries anywhere.
    for (const ActorDefinition* actor : program_.actors()) {
      for (const Script& script : actor->scripts) {
        g_.scriptEntry_[&script] =
            addSynthetic(CfgNodeKind::Entry, "entry:" + script.topBlockId, actor, &script, nullptr);
        g_.scriptExit_[&script] =
            addSynthetic(CfgNodeKind::Exit, "exit:" + script.topBlockId, actor, &script, nullptr);
        createStatementNodes(script.body, actor);
      }
      for (const ProcedureDefinition& proc : actor->procedures) {
        g_.procEntry_[&proc] = addSynthetic(CfgNodeKind::Entry,
                                            "entry:" + proc.definitionBlockId,
                                            actor, nullptr, &proc);
        g_.procExit_[&proc] = addSynthetic(CfgNodeKind::Exit,
                                           "exit:" + proc.definitionBlockId,
                                           actor, nullptr, &proc);
        createStatementNodes(proc.body, actor);
      }
    }

    for (const ActorDefinition* actor : program_.actors()) {
      currentActor_ = actor;
      for (const Script& script : actor->scripts) {
        int entry = g_.scriptEntry_[&script];
        int exit = g_.scriptExit_[&script];
        int first = wireList(script.body, exit, CfgEdgeKind::SEQ);
        g_.addEdge(entry, first, CfgEdgeKind::SEQ);
      }
      for (const ProcedureDefinition& proc : actor->procedures) {
        int entry = g_.procEntry_[&proc];
        int exit = g_.procExit_[&proc];
        int first = wireList(proc.body, exit, CfgEdgeKind::SEQ);
        g_.addEdge(entry, first, CfgEdgeKind::SEQ);
      }
    }

    for (const auto& [proc, succ] : pendingReturns_)
      g_.addEdge(g_.procExit_[proc], succ, CfgEdgeKind::RETURN);

    wireEvents();
    return std::move(g_);
  }

 private:
  int addSynthetic(CfgNodeKind kind, std::string label,
                   const ActorDefinition* actor, const Script* script,
                   const ProcedureDefinition* proc) {
    CfgNode node;
    node.kind = kind;
    node.label = std::move(label);
    node.actor = actor;
    node.script = script;
    node.procedure = proc;
    return g_.addNode(node);
  }

  void createStatementNodes(const StatementList& list,
                            const ActorDefinition* actor) {
    for (const Statement& s : list.statements) {
      CfgNode node;
      node.kind = CfgNodeKind::Statement;
      node.statement = &s;
      node.actor = actor;
      node.label = s.blockId;
      g_.byStatement_[&s] = g_.addNode(node);
      for (const StatementList& sub : s.subStacks)
        createStatementNodes(sub, actor);
    }
  }

  // Wires the list's internal control flow. Control falling off the end
  // reaches `cont` via `fallKind`. Returns the entry node (or `cont` for an
  // empty list).
  int wireList(const StatementList& list, int cont, CfgEdgeKind fallKind) {
    if (list.statements.empty()) return cont;
    const auto& stmts = list.statements;
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      int node = g_.byStatement_[&stmts[i]];
      int succ = i + 1 < stmts.size() ? g_.byStatement_[&stmts[i + 1]] : cont;
      CfgEdgeKind kind = i + 1 < stmts.size() ? CfgEdgeKind::SEQ : fallKind;
      wireStatement(stmts[i], node, succ, kind);
    }
    return g_.byStatement_[&stmts[0]];
  }

  void wireStatement(const Statement& s, int node, int succ,
                     CfgEdgeKind succKind) {
    switch (s.kind) {
      case StatementKind::Forever: {
        int body = wireList(s.subStacks[0], node, CfgEdgeKind::LOOP_BACK);
        g_.addEdge(node, body,
                   body == node ? CfgEdgeKind::LOOP_BACK : CfgEdgeKind::SEQ);
        break;  // no LOOP_EXIT: anything after a forever is unreachable
      }
      case StatementKind::RepeatTimes:
      case StatementKind::RepeatUntil: {
        int body = wireList(s.subStacks[0], node, CfgEdgeKind::LOOP_BACK);
        g_.addEdge(node, body,
                   body == node ? CfgEdgeKind::LOOP_BACK : CfgEdgeKind::SEQ);
        g_.addEdge(node, succ, CfgEdgeKind::LOOP_EXIT);
        break;
      }
      case StatementKind::IfThen: {
        int then = wireList(s.subStacks[0], succ, succKind);
        g_.addEdge(node, then, CfgEdgeKind::BRANCH_TRUE);
        g_.addEdge(node, succ, CfgEdgeKind::BRANCH_FALSE);
        break;
      }
      case StatementKind::IfElse: {
        int then = wireList(s.subStacks[0], succ, succKind);
        int other = wireList(s.subStacks[1], succ, succKind);
        g_.addEdge(node, then, CfgEdgeKind::BRANCH_TRUE);
        g_.addEdge(node, other, CfgEdgeKind::BRANCH_FALSE);
        break;
      }
      case StatementKind::CallProcedure: {
        std::vector<const ProcedureDefinition*> defs;
        for (const ProcedureDefinition& p : currentActor_->procedures)
          if (p.proccode == s.proccode && !s.proccode.empty()) defs.push_back(&p);
        if (defs.empty()) {
          g_.addEdge(node, succ, succKind);
        } else {
          for (const ProcedureDefinition* p : defs) {
            g_.addEdge(node, g_.procEntry_[p], CfgEdgeKind::CALL);
            pendingReturns_.emplace_back(p, succ);
          }
        }
        break;
      }
      default:
        if (!ControlFlowGraph::isTerminal(s)) g_.addEdge(node, succ, succKind);
        break;
    }
  }

  void wireEvents() {
    Triggers triggers = collectTriggers(program_);

    for (const ActorDefinition* actor : program_.actors()) {
      for (const Script& script : actor->scripts) {
        int entry = g_.scriptEntry_[&script];
        switch (script.event.kind) {
          case EventKind::GreenFlag:
          case EventKind::KeyPressed:
          case EventKind::SpriteClicked:
          case EventKind::GreaterThan:
            g_.addEdge(g_.start_, entry, CfgEdgeKind::EVENT);
            break;
          case EventKind::ReceptionOfMessage:
            for (const auto& [trigger, msg] : triggers.broadcasts)
              if (messageMatches(msg.first, msg.second, script.event))
                g_.addEdge(g_.byStatement_[trigger.statement], entry,
                           CfgEdgeKind::EVENT);
            break;
          case EventKind::StartedAsClone:
            for (const auto& [trigger, targets] : triggers.clones) {
              bool matches = targets.empty();  // unknown target: any sprite
              for (const std::string& t : targets)
                if (t == actor->name) matches = true;
              if (matches)
                g_.addEdge(g_.byStatement_[trigger.statement], entry,
                           CfgEdgeKind::EVENT);
            }
            break;
          case EventKind::BackdropSwitchTo:
            for (const auto& [trigger, target] : triggers.backdropSwitches)
              if (target.empty() || target == script.event.name)
                g_.addEdge(g_.byStatement_[trigger.statement], entry,
                           CfgEdgeKind::EVENT);
            break;
          case EventKind::NEVER:
            break;
        }
      }
    }
  }

  const Program& program_;
  const ActorDefinition* currentActor_ = nullptr;
  ControlFlowGraph g_;
  std::vector<std::pair<const ProcedureDefinition*, int>> pendingReturns_;
};

const char* cfgEdgeKindName(CfgEdgeKind kind) {
  switch (kind) {
    case CfgEdgeKind::SEQ: return "SEQ";
    case CfgEdgeKind::BRANCH_TRUE: return "BRANCH_TRUE";
    case CfgEdgeKind::BRANCH_FALSE: return "BRANCH_FALSE";
    case CfgEdgeKind::LOOP_BACK: return "LOOP_BACK";
    case CfgEdgeKind::LOOP_EXIT: return "LOOP_EXIT";
    case CfgEdgeKind::EVENT: return "EVENT";
    case CfgEdgeKind::CALL: return "CALL";
    case CfgEdgeKind::RETURN: return "RETURN";
  }
  return "?";
}

int ControlFlowGraph::addNode(CfgNode node) {
  node.id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  succ_.emplace_back();
  pred_.emplace_back();
  return node.id;
}

void ControlFlowGraph::addEdge(int from, int to, CfgEdgeKind kind) {
  if (hasEdge(from, to, kind)) return;
  edges_.push_back({from, to, kind});
  succ_[from].emplace_back(to, kind);
  pred_[to].emplace_back(from, kind);
}

bool ControlFlowGraph::hasEdge(int from, int to, CfgEdgeKind kind) const {
  for (const auto& [t, k] : succ_[from])
    if (t == to && k == kind) return true;
  return false;
}

bool ControlFlowGraph::isTerminal(const Statement& s) {
  if (s.kind == StatementKind::DeleteThisClone) return true;
  return s.kind == StatementKind::Stop &&
         (s.stopTarget == StopTarget::ALL ||
          s.stopTarget == StopTarget::THIS_SCRIPT);
}

std::string ControlFlowGraph::toDot() const {
  std::ostringstream out;
  out << "digraph cfg {\n";
  for (const CfgNode& n : nodes_) {
    std::string label = n.label;
    if (n.statement != nullptr)
      label = n.statement->opcode + "\\n" + n.statement->blockId;
    out << "  n" << n.id << " [label=\"" << label << "\"];\n";
  }
  for (const CfgEdge& e : edges_)
    out << "  n" << e.from << " -> n" << e.to << " [label=\""
        << cfgEdgeKindName(e.kind) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> cloneTargets(const Statement& s,
                                      const ActorDefinition& owner) {
  std::string literal = cloneTargetLiteral(s);
  if (literal.empty()) return {};
  if (literal == "_myself_") return {owner.name};
  return {literal};
}

ControlFlowGraph build_cfg(const Program& program) {
  return CfgBuilder(program).build();
}

std::vector<EventStatus> reachable_event_edges(const Program& program) {
  Triggers triggers = collectTriggers(program);
  std::vector<EventStatus> out;
  for (const ActorDefinition* actor : program.actors()) {
    for (const Script& script : actor->scripts) {
      EventStatus status;
      status.actor = actor;
      status.script = &script;
      status.event = script.event;
      switch (script.event.kind) {
        case EventKind::GreenFlag:
        case EventKind::KeyPressed:
        case EventKind::SpriteClicked:
        case EventKind::GreaterThan:
          status.fired = true;
          break;
        case EventKind::NEVER:
          status.fired = false;
          break;
        case EventKind::ReceptionOfMessage:
          for (const auto& [trigger, msg] : triggers.broadcasts)
            if (messageMatches(msg.first, msg.second, script.event))
              status.fired = true;
          break;
        case EventKind::StartedAsClone:
          for (const auto& [trigger, targets] : triggers.clones) {
            if (targets.empty()) status.fired = true;
            for (const std::string& t : targets)
              if (t == actor->name) status.fired = true;
          }
          break;
        case EventKind::BackdropSwitchTo:
          for (const auto& [trigger, target] : triggers.backdropSwitches)
            if (target.empty() || target == script.event.name)
              status.fired = true;
          break;
      }
      out.push_back(status);
    }
  }
  return out;
}

}  // namespace sb3lint
