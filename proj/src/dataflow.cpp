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

#include "sb3lint/dataflow.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace sb3lint {

namespace {

std::string variableKeyFromField(const Program& program,
                                 const ActorDefinition& actor,
                                 const Statement& s) {
  const Field* f = s.field("VARIABLE");
  if (f == nullptr) return "";
  return variableFactKey(program, actor, f->id, f->value);
}

void collectVariableReads(const Expression& e, const std::string& parentAnchor,
                          const ActorDefinition& actor, const Program& program,
                          std::vector<ReadSite>& out) {
  const std::string& anchor = e.blockId.empty() ? parentAnchor : e.blockId;
  if (e.kind == ExpressionKind::VariableRef) {
    ReadSite site;
    site.key = variableFactKey(program, actor, e.refId, e.text);
    site.displayName = e.text;
    site.anchorBlockId = anchor;
    out.push_back(std::move(site));
  }
  for (const Expression& operand : e.operands)
    collectVariableReads(operand, anchor, actor, program, out);
}

}  // namespace

bool DataflowResult::definedOnEntry(int node, const std::string& key) const {
  auto it = nameIndex.find(key);
  if (it == nameIndex.end()) return false;
  std::size_t bit = static_cast<std::size_t>(it->second);
  const std::uint64_t word = bits[node * wordsPerNode + bit / 64];
  return (word >> (bit % 64)) & 1u;
}

std::vector<std::string> DataflowResult::entrySet(int node) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::uint64_t word = bits[node * wordsPerNode + i / 64];
    if ((word >> (i % 64)) & 1u) out.push_back(names[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string variableFactKey(const Program& program, const ActorDefinition& actor,
                            const std::string& varId, const std::string& varName) {
  const std::string& identity = varId.empty() ? varName : varId;
  if (actor.variableById(identity) != nullptr)
    return "var:" + actor.name + ":" + identity;
  if (program.stage.variableById(identity) != nullptr)
    return "var:" + program.stage.name + ":" + identity;
  return "var:" + actor.name + ":" + identity;
}

std::string attributeFactKey(const ActorDefinition& actor, const char* attribute) {
  return std::string("attr:") + actor.name + ":" + attribute;
}

std::vector<std::string> absoluteDefinitions(const Statement& s,
                                             const ActorDefinition& actor,
                                             const Program& program) {
  switch (s.kind) {
    case StatementKind::SetVariable: {
      std::string key = variableKeyFromField(program, actor, s);
      if (key.empty()) return {};
      return {key};
    }
    case StatementKind::GoTo:
    case StatementKind::GoToXY:
    case StatementKind::SetX:
    case StatementKind::SetY:
      return {attributeFactKey(actor, "position")};
    case StatementKind::PointInDirection:
      return {attributeFactKey(actor, "direction")};
    case StatementKind::SwitchCostumeTo:
      return {attributeFactKey(actor, "costume")};
    case StatementKind::SetSizeTo:
      return {attributeFactKey(actor, "size")};
    case StatementKind::Show:
    case StatementKind::Hide:
      return {attributeFactKey(actor, "visibility")};
    case StatementKind::PenDown:
    case StatementKind::PenUp:
      return {attributeFactKey(actor, "pen")};
    default:
      return {};
  }
}

std::vector<ReadSite> statementReads(const Statement& s,
                                     const ActorDefinition& actor,
                                     const Program& program) {
  std::vector<ReadSite> out;
  auto attributeRead = [&](const char* attribute, const char* display) {
    out.push_back({attributeFactKey(actor, attribute), display, s.blockId});
  };
  switch (s.kind) {
    case StatementKind::ChangeVariableBy: {
      std::string key = variableKeyFromField(program, actor, s);
      if (!key.empty()) {
        const Field* f = s.field("VARIABLE");
        out.push_back({key, f != nullptr ? f->value : "", s.blockId});
      }
      break;
    }
    case StatementKind::ChangeXBy:
    case StatementKind::ChangeYBy:
      attributeRead("position", "position");
      break;
    case StatementKind::TurnLeft:
    case StatementKind::TurnRight:
      attributeRead("direction", "direction");
      break;
    case StatementKind::ChangeSizeBy:
      attributeRead("size", "size");
      break;
    case StatementKind::NextCostume:
      attributeRead("costume", "costume");
      break;
    default:
      break;
  }
  for (const Expression& input : s.inputs)
    collectVariableReads(input, s.blockId, actor, program, out);
  return out;
}

bool carriesDataflow(const ControlFlowGraph& cfg, const CfgEdge& edge) {
  if (edge.kind != CfgEdgeKind::EVENT) return true;
  const CfgNode& from = cfg.nodes()[edge.from];
  return from.statement != nullptr &&
         from.statement->kind == StatementKind::BroadcastAndWait;
}

DataflowResult definitely_defined(const ControlFlowGraph& cfg,
                                  const Program& program,
                                  std::optional<unsigned> shuffleSeed) {
  const auto& nodes = cfg.nodes();
  const std::size_t n = nodes.size();

  // Fact universe: every key some statement can define. Keys that are only
  // read have no bit; lookups on them report "not defined".
  DataflowResult result;
  std::vector<std::vector<int>> gen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes[i].statement == nullptr || nodes[i].actor == nullptr) continue;
    for (const std::string& key :
         absoluteDefinitions(*nodes[i].statement, *nodes[i].actor, program)) {
      auto [it, inserted] =
          result.nameIndex.try_emplace(key, static_cast<int>(result.names.size()));
      if (inserted) result.names.push_back(key);
      gen[i].push_back(it->second);
    }
  }

  const std::size_t bitCount = result.names.size();
  const std::size_t words = bitCount == 0 ? 1 : (bitCount + 63) / 64;
  result.wordsPerNode = words;

  // Entries fired by start, plain broadcast, clone or backdrop events run
  // with nothing defined; entries fed only by synchronous edges meet over
  // their predecessors. Everything else starts at top (all ones).
  std::vector<char> boundary(n, 0);
  std::vector<std::vector<int>> carryingPreds(n);
  std::vector<std::vector<int>> carryingSuccs(n);
  for (const CfgEdge& e : cfg.edges()) {
    if (carriesDataflow(cfg, e)) {
      carryingPreds[e.to].push_back(e.from);
      carryingSuccs[e.from].push_back(e.to);
    } else {
      boundary[e.to] = 1;
    }
  }

  const std::uint64_t fullWord = ~std::uint64_t{0};
  std::vector<std::uint64_t> topMask(words, 0);
  for (std::size_t b = 0; b < bitCount; ++b) topMask[b / 64] |= std::uint64_t{1} << (b % 64);

  // out-sets; in-sets are recomputed from predecessors on demand.
  std::vector<std::uint64_t> out(n * words);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < words; ++w)
      out[i * words + w] = boundary[i] ? 0 : topMask[w];
  // Fold gen into the initial value so seeds are consistent.
  for (std::size_t i = 0; i < n; ++i)
    for (int bit : gen[i])
      out[i * words + bit / 64] |= std::uint64_t{1} << (bit % 64);
  // Start node defines nothing.
  for (std::size_t w = 0; w < words; ++w)
    out[static_cast<std::size_t>(cfg.startNode()) * words + w] = 0;

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  if (shuffleSeed) {
    std::mt19937 rng(*shuffleSeed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::deque<int> worklist(order.begin(), order.end());
  std::vector<char> queued(n, 1);
  std::vector<std::uint64_t> inSet(words);

  while (!worklist.empty()) {
    int node = worklist.front();
    worklist.pop_front();
    queued[node] = 0;
    if (node == cfg.startNode()) continue;

    if (boundary[node]) {
      std::fill(inSet.begin(), inSet.end(), 0);
    } else if (carryingPreds[node].empty()) {
      inSet.assign(topMask.begin(), topMask.end());
    } else {
      inSet.assign(topMask.begin(), topMask.end());
      for (int pred : carryingPreds[node])
        for (std::size_t w = 0; w < words; ++w) inSet[w] &= out[pred * words + w];
    }

    std::vector<std::uint64_t> newOut = inSet;
    for (int bit : gen[node]) newOut[bit / 64] |= std::uint64_t{1} << (bit % 64);

    bool changed = false;
    for (std::size_t w = 0; w < words; ++w) {
      if (out[node * words + w] != newOut[w]) {
        out[node * words + w] = newOut[w];
        changed = true;
      }
    }
    if (changed) {
      for (int succ : carryingSuccs[node]) {
        if (!queued[succ]) {
          queued[succ] = 1;
          worklist.push_back(succ);
        }
      }
    }
  }

  // Store entry facts per node.
  result.bits.assign(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == cfg.startNode()) continue;
    if (boundary[i]) continue;  // entry facts are empty
    if (carryingPreds[i].empty()) {
      for (std::size_t w = 0; w < words; ++w) result.bits[i * words + w] = topMask[w];
      continue;
    }
    for (std::size_t w = 0; w < words; ++w) result.bits[i * words + w] = topMask[w];
    for (int pred : carryingPreds[i])
      for (std::size_t w = 0; w < words; ++w)
        result.bits[i * words + w] &= out[pred * words + w];
  }
  return result;
}

}  // namespace sb3lint
