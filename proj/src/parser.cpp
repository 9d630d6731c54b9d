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
// project.json -> Program. The parser is total over syntactically valid
// JSON: anything it does not understand degrades to UnknownOpcode nodes or
// empty slots. The only hard failures are a missing `targets` array, a
// missing stage target, and a cyclic `next` chain.

#include "sb3lint/parser.hpp"

#include <json.hpp>

#include <set>
#include <unordered_set>

#include "sb3lint/errors.hpp"
#include "sb3lint/opcodes.hpp"
#include "sb3lint/zip.hpp"

namespace sb3lint {

namespace {

using json = nlohmann::ordered_json;

std::string literalText(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number() || v.is_object() || v.is_array()) return v.dump();
  return "";
}

// Scratch input shadow states.
constexpr int kInputSameBlockShadow = 1;
constexpr int kInputBlockNoShadow = 2;
constexpr int kInputDiffBlockShadow = 3;

class TargetParser {
 public:
  TargetParser(const json& target, std::vector<std::string>& diagnostics)
      : target_(target), diagnostics_(diagnostics) {
    if (target_.contains("blocks") && target_["blocks"].is_object())
      blocks_ = &target_["blocks"];
  }

  // Test entry point for the input-decoding rules.
  Expression decodeTestInput(const json& raw, bool booleanSlot) {
    return decodeInputValue(raw, booleanSlot ? "control_if" : "",
                            booleanSlot ? "CONDITION" : "VALUE");
  }

  ActorDefinition parse() {
    actor_.name = target_.value("name", std::string());
    actor_.isStage = target_.value("isStage", false);
    actor_.currentCostumeIndex = target_.value("currentCostume", 0);
    parseDeclarations();
    if (blocks_) {
      parseTopLevel();
      sweepOrphans();
    }
    return std::move(actor_);
  }

 private:
  void parseDeclarations() {
    VariableScope scope =
        actor_.isStage ? VariableScope::GLOBAL : VariableScope::LOCAL;
    if (target_.contains("variables") && target_["variables"].is_object()) {
      for (auto& [id, decl] : target_["variables"].items()) {
        VariableDecl v;
        v.id = id;
        v.scope = scope;
        if (decl.is_array() && !decl.empty()) {
          v.name = literalText(decl[0]);
          if (decl.size() > 1) v.initialValue = literalText(decl[1]);
        }
        actor_.variables.push_back(std::move(v));
      }
    }
    if (target_.contains("lists") && target_["lists"].is_object()) {
      for (auto& [id, decl] : target_["lists"].items()) {
        ListDecl l;
        l.id = id;
        l.scope = scope;
        if (decl.is_array() && !decl.empty()) l.name = literalText(decl[0]);
        actor_.lists.push_back(std::move(l));
      }
    }
    if (target_.contains("broadcasts") && target_["broadcasts"].is_object()) {
      for (auto& [id, name] : target_["broadcasts"].items())
        actor_.broadcasts.emplace_back(id, literalText(name));
    }
    if (target_.contains("costumes") && target_["costumes"].is_array()) {
      for (const auto& c : target_["costumes"])
        if (c.is_object()) actor_.costumeNames.push_back(c.value("name", std::string()));
    }
    if (target_.contains("sounds") && target_["sounds"].is_array()) {
      for (const auto& s : target_["sounds"])
        if (s.is_object()) actor_.soundNames.push_back(s.value("name", std::string()));
    }
  }

  const json* blockById(const std::string& id) const {
    if (!blocks_ || id.empty()) return nullptr;
    auto it = blocks_->find(id);
    if (it == blocks_->end() || !it->is_object()) return nullptr;
    return &*it;
  }

  static bool isShadow(const json& block) { return block.value("shadow", false); }

  void parseTopLevel() {
    for (auto& [id, block] : blocks_->items()) {
      if (!block.is_object()) continue;  // compressed loose reporters
      if (!block.value("topLevel", false) || isShadow(block)) continue;
      if (consumed_.count(id)) continue;
      std::string opcode = block.value("opcode", std::string());
      if (opcode == "procedures_definition") {
        parseProcedure(id, block);
      } else if (auto event = eventKindFor(opcode)) {
        parseHatScript(id, block, *event);
      } else {
        parseLooseScript(id, block);
      }
    }
  }

  // Any non-shadow block left unconsumed (dangling parents after hand
  // edits) becomes loose code so nothing silently disappears.
  void sweepOrphans() {
    for (auto& [id, block] : blocks_->items()) {
      if (!block.is_object() || isShadow(block)) continue;
      if (consumed_.count(id)) continue;
      parseLooseScript(id, block);
    }
  }

  void parseHatScript(const std::string& id, const json& block, EventKind kind) {
    consumed_.insert(id);
    Script script;
    script.topBlockId = id;
    script.x = block.value("x", 0.0);
    script.y = block.value("y", 0.0);
    script.event.kind = kind;
    switch (kind) {
      case EventKind::KeyPressed:
        script.event.key = fieldValue(block, "KEY_OPTION");
        break;
      case EventKind::BackdropSwitchTo:
        script.event.name = fieldValue(block, "BACKDROP");
        break;
      case EventKind::ReceptionOfMessage:
        script.event.name = fieldValue(block, "BROADCAST_OPTION");
        script.event.messageId = fieldId(block, "BROADCAST_OPTION");
        break;
      case EventKind::GreaterThan:
        script.event.attribute = fieldValue(block, "WHENGREATERTHANMENU");
        script.event.value = decodeNamedInput(block, "VALUE", "event_whengreaterthan");
        break;
      default:
        break;
    }
    script.body = parseChain(nextOf(block), id);
    actor_.scripts.push_back(std::move(script));
  }

  void parseLooseScript(const std::string& id, const json& block) {
    Script script;
    script.topBlockId = id;
    script.x = block.value("x", 0.0);
    script.y = block.value("y", 0.0);
    script.event.kind = EventKind::NEVER;
    script.body = parseChain(id, "");
    actor_.scripts.push_back(std::move(script));
  }

  void parseProcedure(const std::string& id, const json& block) {
    consumed_.insert(id);
    ProcedureDefinition proc;
    proc.definitionBlockId = id;
    proc.x = block.value("x", 0.0);
    proc.y = block.value("y", 0.0);

    // The prototype is a shadow block hanging off the custom_block input.
    if (block.contains("inputs") && block["inputs"].is_object()) {
      const auto& inputs = block["inputs"];
      auto it = inputs.find("custom_block");
      if (it != inputs.end() && it->is_array() && it->size() > 1 &&
          (*it)[1].is_string()) {
        proc.prototypeBlockId = (*it)[1].get<std::string>();
        if (const json* proto = blockById(proc.prototypeBlockId)) {
          // A prototype stripped of its shadow flag (hand-edited JSON)
          // stays in the block map and surfaces as loose code instead.
          if (isShadow(*proto)) consumed_.insert(proc.prototypeBlockId);
          readPrototype(*proto, proc);
        }
      }
    }
    proc.body = parseChain(nextOf(block), id);
    actor_.procedures.push_back(std::move(proc));
  }

  void readPrototype(const json& proto, ProcedureDefinition& proc) {
    if (!proto.contains("mutation") || !proto["mutation"].is_object()) return;
    const json& m = proto["mutation"];
    proc.proccode = m.value("proccode", std::string());
    const json& warp = m.contains("warp") ? m["warp"] : json();
    if (warp.is_boolean())
      proc.warp = warp.get<bool>();
    else if (warp.is_string())
      proc.warp = warp.get<std::string>() == "true";

    std::vector<std::string> names = decodeStringArray(m, "argumentnames");
    std::vector<ParameterKind> kinds = placeholderKinds(proc.proccode);
    for (std::size_t i = 0; i < names.size(); ++i) {
      ParameterKind kind =
          i < kinds.size() ? kinds[i] : ParameterKind::STRING_NUMBER;
      proc.parameters.emplace_back(names[i], kind);
    }
  }

  // %s and %n placeholders take string/number arguments, %b booleans.
  static std::vector<ParameterKind> placeholderKinds(const std::string& proccode) {
    std::vector<ParameterKind> kinds;
    for (std::size_t i = 0; i + 1 < proccode.size(); ++i) {
      if (proccode[i] != '%') continue;
      char c = proccode[i + 1];
      if (c == 's' || c == 'n')
        kinds.push_back(ParameterKind::STRING_NUMBER);
      else if (c == 'b')
        kinds.push_back(ParameterKind::BOOLEAN);
    }
    return kinds;
  }

  // Mutation arrays arrive as JSON encoded inside a JSON string.
  std::vector<std::string> decodeStringArray(const json& mutation,
                                             const char* key) {
    std::vector<std::string> out;
    if (!mutation.contains(key)) return out;
    const json& raw = mutation[key];
    json arr;
    if (raw.is_string()) {
      arr = json::parse(raw.get<std::string>(), nullptr, false);
    } else if (raw.is_array()) {
      arr = raw;
    }
    if (arr.is_array())
      for (const auto& v : arr) out.push_back(literalText(v));
    return out;
  }

  static std::string nextOf(const json& block) {
    if (block.contains("next") && block["next"].is_string())
      return block["next"].get<std::string>();
    return "";
  }

  std::string fieldValue(const json& block, const char* name) const {
    if (!block.contains("fields") || !block["fields"].is_object()) return "";
    const auto& fields = block["fields"];
    auto it = fields.find(name);
    if (it == fields.end() || !it->is_array() || it->empty()) return "";
    return literalText((*it)[0]);
  }

  std::string fieldId(const json& block, const char* name) const {
    if (!block.contains("fields") || !block["fields"].is_object()) return "";
    const auto& fields = block["fields"];
    auto it = fields.find(name);
    if (it == fields.end() || !it->is_array() || it->size() < 2) return "";
    return literalText((*it)[1]);
  }

  // Follows a `next` chain, building the statement list. A revisit within
  // one chain is the one hard parse error.
  StatementList parseChain(const std::string& startId,
                           const std::string& chainOwner) {
    StatementList list;
    std::set<std::string> seen;
    std::string id = startId;
    if (!chainOwner.empty()) seen.insert(chainOwner);
    while (!id.empty()) {
      if (seen.count(id))
        throw MalformedProject("cyclic next chain at block " + id);
      seen.insert(id);
      const json* block = blockById(id);
      if (!block || isShadow(*block)) break;
      if (consumed_.count(id)) break;  // already owned by another script
      consumed_.insert(id);
      list.statements.push_back(parseStatement(id, *block));
      id = nextOf(*block);
    }
    return list;
  }

  Statement parseStatement(const std::string& id, const json& block) {
    ++depth_;
    Statement s;
    s.blockId = id;
    s.opcode = block.value("opcode", std::string());
    s.kind = statementKindFor(s.opcode).value_or(StatementKind::UnknownOpcode);
    if (block.contains("x")) {
      s.x = block.value("x", 0.0);
      s.y = block.value("y", 0.0);
      s.hasPosition = true;
    }
    if (block.contains("fields") && block["fields"].is_object()) {
      for (auto& [name, f] : block["fields"].items()) {
        Field field;
        if (f.is_array() && !f.empty()) {
          field.value = literalText(f[0]);
          if (f.size() > 1) field.id = literalText(f[1]);
        } else {
          field.value = literalText(f);
        }
        s.fields[name] = std::move(field);
      }
    }
    if (s.kind == StatementKind::Stop) {
      std::string option = s.field("STOP_OPTION") ? s.field("STOP_OPTION")->value : "";
      if (option == "this script")
        s.stopTarget = StopTarget::THIS_SCRIPT;
      else if (option == "other scripts in sprite" ||
               option == "other scripts in stage")
        s.stopTarget = StopTarget::OTHER_SCRIPTS;
      else
        s.stopTarget = StopTarget::ALL;
    }

    if (depth_ < kMaxDepth && block.contains("inputs") &&
        block["inputs"].is_object()) {
      for (auto& [name, raw] : block["inputs"].items()) {
        if (name == "SUBSTACK" || name == "SUBSTACK2") continue;
        s.inputNames.push_back(name);
        s.inputs.push_back(decodeInputValue(raw, s.opcode, name));
      }
      // C-blocks: SUBSTACK then SUBSTACK2 in fixed order.
      if (s.kind == StatementKind::IfElse) {
        s.subStacks.push_back(parseSubstack(block, "SUBSTACK"));
        s.subStacks.push_back(parseSubstack(block, "SUBSTACK2"));
      } else if (s.kind == StatementKind::IfThen ||
                 s.kind == StatementKind::Forever ||
                 s.kind == StatementKind::RepeatTimes ||
                 s.kind == StatementKind::RepeatUntil) {
        s.subStacks.push_back(parseSubstack(block, "SUBSTACK"));
      } else if (block["inputs"].contains("SUBSTACK")) {
        // Unknown C-shaped extension block: keep its body.
        s.subStacks.push_back(parseSubstack(block, "SUBSTACK"));
        if (block["inputs"].contains("SUBSTACK2"))
          s.subStacks.push_back(parseSubstack(block, "SUBSTACK2"));
      }
    } else if (s.kind == StatementKind::IfElse) {
      s.subStacks.resize(2);
    } else if (s.kind == StatementKind::IfThen ||
               s.kind == StatementKind::Forever ||
               s.kind == StatementKind::RepeatTimes ||
               s.kind == StatementKind::RepeatUntil) {
      s.subStacks.resize(1);
    }

    if (s.kind == StatementKind::CallProcedure) {
      readCallMutation(block, s);
    }
    // The editor drops empty condition slots from `inputs`; finders need
    // the unfilled slot to be visible.
    if (s.kind == StatementKind::IfThen || s.kind == StatementKind::IfElse ||
        s.kind == StatementKind::RepeatUntil ||
        s.kind == StatementKind::WaitUntil) {
      if (s.input("CONDITION") == nullptr) {
        Expression empty;
        empty.kind = ExpressionKind::EmptyBool;
        s.inputNames.push_back("CONDITION");
        s.inputs.push_back(std::move(empty));
      }
    }
    --depth_;
    return s;
  }

  void readCallMutation(const json& block, Statement& s) {
    if (!block.contains("mutation") || !block["mutation"].is_object()) return;
    const json& m = block["mutation"];
    s.proccode = m.value("proccode", std::string());
    // Reorder the already-decoded inputs into declared argument order.
    std::vector<std::string> argIds = decodeStringArray(m, "argumentids");
    if (argIds.empty()) return;
    std::vector<Expression> ordered;
    std::vector<std::string> orderedNames;
    for (const auto& argId : argIds) {
      bool found = false;
      for (std::size_t i = 0; i < s.inputNames.size(); ++i) {
        if (s.inputNames[i] == argId) {
          ordered.push_back(s.inputs[i]);
          orderedNames.push_back(argId);
          found = true;
          break;
        }
      }
      if (!found) {
        Expression empty;
        empty.kind = ExpressionKind::EmptyNumber;
        ordered.push_back(std::move(empty));
        orderedNames.push_back(argId);
      }
    }
    s.inputs = std::move(ordered);
    s.inputNames = std::move(orderedNames);
  }

  StatementList parseSubstack(const json& block, const char* name) {
    const auto& inputs = block["inputs"];
    auto it = inputs.find(name);
    if (it == inputs.end() || !it->is_array()) return {};
    // [shadowState, blockId] with the id possibly null.
    for (std::size_t i = 1; i < it->size(); ++i) {
      if ((*it)[i].is_string()) {
        std::string start = (*it)[i].get<std::string>();
        if (activeSubstacks_.count(start)) return {};  // degrade on odd loops
        activeSubstacks_.insert(start);
        StatementList body = parseChain(start, "");
        activeSubstacks_.erase(start);
        return body;
      }
    }
    return {};
  }

  Expression decodeNamedInput(const json& block, const char* name,
                              const std::string& opcode) {
    if (block.contains("inputs") && block["inputs"].is_object()) {
      const auto& inputs = block["inputs"];
      auto it = inputs.find(name);
      if (it != inputs.end()) return decodeInputValue(*it, opcode, name);
    }
    Expression e;
    e.kind = isBooleanSlot(opcode, name) ? ExpressionKind::EmptyBool
                                         : ExpressionKind::EmptyNumber;
    return e;
  }

  Expression emptyFor(const std::string& parentOpcode, const std::string& slot) {
    Expression e;
    e.kind = isBooleanSlot(parentOpcode, slot) ? ExpressionKind::EmptyBool
                                               : ExpressionKind::EmptyNumber;
    return e;
  }

  Expression decodeInputValue(const json& raw, const std::string& parentOpcode,
                              const std::string& slot) {
    if (!raw.is_array() || raw.empty()) return emptyFor(parentOpcode, slot);

    // Prefer the live value over the obscured shadow.
    const json* data = raw.size() > 1 ? &raw[1] : nullptr;
    const json* obscured = raw.size() > 2 ? &raw[2] : nullptr;

    if (data == nullptr || data->is_null()) {
      if (obscured != nullptr && obscured->is_array())
        return decodePrimitive(*obscured, parentOpcode, slot);
      return emptyFor(parentOpcode, slot);
    }
    if (data->is_array()) return decodePrimitive(*data, parentOpcode, slot);
    if (data->is_string()) {
      const std::string id = data->get<std::string>();
      const json* block = blockById(id);
      if (block == nullptr || consumed_.count(id)) {
        if (obscured != nullptr && obscured->is_array())
          return decodePrimitive(*obscured, parentOpcode, slot);
        return emptyFor(parentOpcode, slot);
      }
      if (isShadow(*block)) return foldShadow(id, *block, parentOpcode, slot);
      return parseExpressionBlock(id, *block);
    }
    if (data->is_number()) {
      Expression e;
      e.kind = ExpressionKind::NumberLiteral;
      e.number = data->get<double>();
      e.text = literalText(*data);
      return e;
    }
    diagnostics_.push_back("unknown input encoding in slot " + slot);
    Expression e;
    e.kind = ExpressionKind::StringLiteral;
    e.text = raw.dump();
    return e;
  }

  Expression decodePrimitive(const json& prim, const std::string& parentOpcode,
                             const std::string& slot) {
    if (prim.empty() || !prim[0].is_number_integer())
      return emptyFor(parentOpcode, slot);
    int code = prim[0].get<int>();
    const json value = prim.size() > 1 ? prim[1] : json();
    Expression e;
    switch (code) {
      case 4: case 5: case 6: case 7: case 8: {
        std::string text = literalText(value);
        if (value.is_number()) {
          e.kind = ExpressionKind::NumberLiteral;
          e.number = value.get<double>();
          e.text = text;
        } else if (isNumericText(text)) {
          e.kind = ExpressionKind::NumberLiteral;
          e.number = std::strtod(text.c_str(), nullptr);
          e.text = text;
        } else {
          e.kind = ExpressionKind::StringLiteral;
          e.text = text;
        }
        return e;
      }
      case 9:
        e.kind = ExpressionKind::ColorLiteral;
        e.text = literalText(value);
        return e;
      case 10:
        e.kind = ExpressionKind::StringLiteral;
        e.text = literalText(value);
        return e;
      case 11:
        e.kind = ExpressionKind::BroadcastRef;
        e.text = literalText(value);
        if (prim.size() > 2) e.refId = literalText(prim[2]);
        return e;
      case 12:
        e.kind = ExpressionKind::VariableRef;
        e.text = literalText(value);
        if (prim.size() > 2) e.refId = literalText(prim[2]);
        return e;
      case 13:
        e.kind = ExpressionKind::ListRef;
        e.text = literalText(value);
        if (prim.size() > 2) e.refId = literalText(prim[2]);
        return e;
      default:
        diagnostics_.push_back("unknown input code " + std::to_string(code) +
                               " in slot " + slot);
        e.kind = ExpressionKind::StringLiteral;
        e.text = prim.dump();
        return e;
    }
  }

  // Shadow menu blocks are editor furniture; they collapse into the value
  // of their single field and do not count as blocks.
  Expression foldShadow(const std::string& id, const json& block,
                        const std::string& parentOpcode, const std::string& slot) {
    if (block.contains("fields") && block["fields"].is_object() &&
        !block["fields"].empty()) {
      const auto& f = *block["fields"].begin();
      Expression e;
      e.kind = ExpressionKind::StringLiteral;
      if (f.is_array() && !f.empty()) e.text = literalText(f[0]);
      else e.text = literalText(f);
      return e;
    }
    // Shadow without fields (e.g. an empty custom-block prototype slot).
    (void)id;
    return emptyFor(parentOpcode, slot);
  }

  Expression parseExpressionBlock(const std::string& id, const json& block) {
    consumed_.insert(id);
    ++depth_;
    Expression e;
    e.blockId = id;
    e.opcode = block.value("opcode", std::string());

    if (block.contains("fields") && block["fields"].is_object()) {
      for (auto& [name, f] : block["fields"].items()) {
        Field field;
        if (f.is_array() && !f.empty()) {
          field.value = literalText(f[0]);
          if (f.size() > 1) field.id = literalText(f[1]);
        } else {
          field.value = literalText(f);
        }
        e.fields[name] = std::move(field);
      }
    }

    if (e.opcode == "operator_equals" || e.opcode == "operator_lt" ||
        e.opcode == "operator_gt") {
      e.kind = ExpressionKind::Comparison;
      e.comparison = e.opcode == "operator_equals" ? ComparisonOp::EQ
                     : e.opcode == "operator_lt"   ? ComparisonOp::LT
                                                   : ComparisonOp::GT;
    } else if (e.opcode == "operator_and" || e.opcode == "operator_or" ||
               e.opcode == "operator_not") {
      e.kind = ExpressionKind::BoolOp;
      e.boolOp = e.opcode == "operator_and" ? BoolOpKind::AND
                 : e.opcode == "operator_or" ? BoolOpKind::OR
                                             : BoolOpKind::NOT;
    } else if (e.opcode == "sensing_answer") {
      e.kind = ExpressionKind::Answer;
    } else if (e.opcode == "argument_reporter_string_number" ||
               e.opcode == "argument_reporter_boolean") {
      e.kind = ExpressionKind::ParameterRef;
      e.parameterKind = e.opcode == "argument_reporter_boolean"
                            ? ParameterKind::BOOLEAN
                            : ParameterKind::STRING_NUMBER;
      auto it = e.fields.find("VALUE");
      if (it != e.fields.end()) e.text = it->second.value;
    } else {
      e.kind = ExpressionKind::Reporter;
    }

    if (depth_ < kMaxDepth && block.contains("inputs") &&
        block["inputs"].is_object()) {
      for (auto& [name, raw] : block["inputs"].items()) {
        e.operandNames.push_back(name);
        e.operands.push_back(decodeInputValue(raw, e.opcode, name));
      }
    }
    --depth_;
    return e;
  }

  const json& target_;
  const json* blocks_ = nullptr;
  ActorDefinition actor_;
  std::set<std::string> consumed_;
  std::set<std::string> activeSubstacks_;
  std::vector<std::string>& diagnostics_;
  int depth_ = 0;
  static constexpr int kMaxDepth = 1000;
};

// Appends broadcast declarations for ids referenced but never declared, so
// every reference resolves somewhere (the stage holds the globals).
void registerDanglingBroadcasts(Program& program) {
  std::set<std::string> declared;
  for (const auto* actor : program.actors())
    for (const auto& [id, name] : actor->broadcasts) declared.insert(id);

  std::vector<std::pair<std::string, std::string>> missing;
  std::set<std::string> missingIds;

  auto visitExpr = [&](const Expression& e, auto&& self) -> void {
    if (e.kind == ExpressionKind::BroadcastRef && !e.refId.empty() &&
        !declared.count(e.refId) && !missingIds.count(e.refId)) {
      missingIds.insert(e.refId);
      missing.emplace_back(e.refId, e.text);
    }
    for (const auto& op : e.operands) self(op, self);
  };
  auto visitList = [&](const StatementList& list, auto&& self) -> void {
    for (const auto& s : list.statements) {
      for (const auto& in : s.inputs) visitExpr(in, visitExpr);
      for (const auto& sub : s.subStacks) self(sub, self);
    }
  };
  for (const auto* actor : program.actors()) {
    for (const auto& script : actor->scripts) {
      if (script.event.kind == EventKind::ReceptionOfMessage &&
          !script.event.messageId.empty() &&
          !declared.count(script.event.messageId) &&
          !missingIds.count(script.event.messageId)) {
        missingIds.insert(script.event.messageId);
        missing.emplace_back(script.event.messageId, script.event.name);
      }
      visitList(script.body, visitList);
    }
    for (const auto& proc : actor->procedures) visitList(proc.body, visitList);
  }
  for (auto& entry : missing) program.stage.broadcasts.push_back(std::move(entry));
}

Program parseDocument(const json& doc, std::string name) {
  if (!doc.is_object() || !doc.contains("targets") || !doc["targets"].is_array())
    throw MalformedProject("project.json has no targets array");

  Program program;
  program.name = std::move(name);

  bool haveStage = false;
  for (const auto& target : doc["targets"]) {
    if (!target.is_object()) continue;
    TargetParser parser(target, program.diagnostics);
    ActorDefinition actor = parser.parse();
    if (actor.isStage && !haveStage) {
      haveStage = true;
      program.stage = std::move(actor);
    } else {
      actor.isStage = false;
      program.sprites.push_back(std::move(actor));
    }
  }
  if (!haveStage) throw MalformedProject("project has no stage target");

  registerDanglingBroadcasts(program);
  return program;
}

AssetInventory inventoryFromDeclarations(const json& doc) {
  AssetInventory inventory;
  if (!doc.is_object() || !doc.contains("targets") || !doc["targets"].is_array())
    return inventory;
  for (const auto& target : doc["targets"]) {
    if (!target.is_object()) continue;
    AssetInventory::ActorAssets assets;
    if (target.contains("costumes") && target["costumes"].is_array())
      for (const auto& c : target["costumes"])
        if (c.is_object()) assets.costumeNames.push_back(c.value("name", std::string()));
    if (target.contains("sounds") && target["sounds"].is_array())
      for (const auto& s : target["sounds"])
        if (s.is_object()) assets.soundNames.push_back(s.value("name", std::string()));
    inventory.perActor[target.value("name", std::string())] = std::move(assets);
  }
  return inventory;
}

void markMissingFiles(const json& doc, const zip::Archive& archive,
                      AssetInventory& inventory) {
  if (!doc.is_object() || !doc.contains("targets") || !doc["targets"].is_array())
    return;
  for (const auto& target : doc["targets"]) {
    if (!target.is_object()) continue;
    auto it = inventory.perActor.find(target.value("name", std::string()));
    if (it == inventory.perActor.end()) continue;
    auto checkList = [&](const char* key) {
      if (!target.contains(key) || !target[key].is_array()) return;
      for (const auto& asset : target[key]) {
        if (!asset.is_object()) continue;
        std::string file = asset.value("md5ext", std::string());
        if (file.empty()) {
          std::string assetId = asset.value("assetId", std::string());
          std::string format = asset.value("dataFormat", std::string());
          if (!assetId.empty() && !format.empty()) file = assetId + "." + format;
        }
        if (!file.empty() && !archive.contains(file))
          it->second.missingFiles.push_back(asset.value("name", std::string()));
      }
    };
    checkList("costumes");
    checkList("sounds");
  }
}

json parseJsonText(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw MalformedProject("project.json is not valid JSON");
  return doc;
}

}  // namespace

Program parse_project(std::string_view jsonText, std::string name) {
  return parseDocument(parseJsonText(jsonText), std::move(name));
}

std::pair<Program, AssetInventory> parse_project_with_assets(
    std::string_view jsonText, std::string name) {
  json doc = parseJsonText(jsonText);
  Program program = parseDocument(doc, std::move(name));
  return {std::move(program), inventoryFromDeclarations(doc)};
}

Expression decode_input(std::string_view rawInputJson,
                        std::string_view blocksJson, bool booleanSlot) {
  json raw = json::parse(rawInputJson, nullptr, false);
  json target;
  target["blocks"] = json::parse(blocksJson, nullptr, false);
  if (!target["blocks"].is_object()) target["blocks"] = json::object();
  std::vector<std::string> diagnostics;
  TargetParser parser(target, diagnostics);
  return parser.decodeTestInput(raw, booleanSlot);
}

std::pair<Program, AssetInventory> load_sb3(
    const std::vector<std::uint8_t>& archiveBytes, std::string name) {
  zip::Archive archive(archiveBytes);
  if (!archive.contains("project.json"))
    throw NoProjectJson("archive contains no project.json");
  std::vector<std::uint8_t> raw = archive.read("project.json");
  std::string_view text(reinterpret_cast<const char*>(raw.data()), raw.size());

  json doc = parseJsonText(text);
  Program program = parseDocument(doc, std::move(name));
  AssetInventory inventory = inventoryFromDeclarations(doc);
  markMissingFiles(doc, archive, inventory);
  return {std::move(program), std::move(inventory)};
}

}  // namespace sb3lint
