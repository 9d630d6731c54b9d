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

#include "support/builder.hpp"

#include "sb3lint/opcodes.hpp"

namespace testsupport {

using ojson = nlohmann::ordered_json;

In num(double value) {
  In in;
  in.kind = In::Kind::Number;
  // The editor writes integral numbers without a decimal point.
  if (value == static_cast<long long>(value)) {
    in.text = std::to_string(static_cast<long long>(value));
  } else {
    ojson v = value;
    in.text = v.dump();
  }
  return in;
}

In num(const std::string& value) {
  In in;
  in.kind = In::Kind::Number;
  in.text = value;
  return in;
}

In txt(std::string value) {
  In in;
  in.kind = In::Kind::Text;
  in.text = std::move(value);
  return in;
}

In color(std::string hex) {
  In in;
  in.kind = In::Kind::Color;
  in.text = std::move(hex);
  return in;
}

In varRef(std::string name, std::string id) {
  In in;
  in.kind = In::Kind::VarRef;
  in.text = std::move(name);
  in.id2 = std::move(id);
  return in;
}

In listRefIn(std::string name, std::string id) {
  In in;
  in.kind = In::Kind::ListRef;
  in.text = std::move(name);
  in.id2 = std::move(id);
  return in;
}

In broadcastIn(std::string name, std::string id) {
  In in;
  in.kind = In::Kind::BroadcastRef;
  in.text = std::move(name);
  in.id2 = std::move(id);
  return in;
}

In blockIn(Blk reporter) {
  In in;
  in.kind = In::Kind::Block;
  in.block = std::make_shared<Blk>(std::move(reporter));
  return in;
}

In menu(std::string menuOpcode, std::string fieldName, std::string value) {
  In in;
  in.kind = In::Kind::Menu;
  in.menuOpcode = std::move(menuOpcode);
  in.menuField = std::move(fieldName);
  in.text = std::move(value);
  return in;
}

In emptyBoolNull() {
  In in;
  in.kind = In::Kind::EmptyBoolNull;
  return in;
}

In absent() {
  In in;
  in.kind = In::Kind::Absent;
  return in;
}

Blk stmt(std::string opcode) {
  Blk b;
  b.opcode = std::move(opcode);
  return b;
}

Blk rep(std::string opcode) { return stmt(std::move(opcode)); }

Blk call(std::string proccode, std::vector<In> args) {
  Blk b = stmt("procedures_call");
  b.callProccode = std::move(proccode);
  for (std::size_t i = 0; i < args.size(); ++i)
    b.in("arg" + std::to_string(i + 1), std::move(args[i]));
  return b;
}

Blk cmp(const char* op, In left, In right) {
  return rep(std::string("operator_") + op)
      .in("OPERAND1", std::move(left))
      .in("OPERAND2", std::move(right));
}

Blk boolOp(const char* op, In left, In right) {
  return rep(std::string("operator_") + op)
      .in("OPERAND1", std::move(left))
      .in("OPERAND2", std::move(right));
}

Blk boolNot(In operand) {
  return rep("operator_not").in("OPERAND", std::move(operand));
}

Blk answer() { return rep("sensing_answer"); }

Blk paramRef(std::string name, bool boolean) {
  Blk b = rep(boolean ? "argument_reporter_boolean"
                      : "argument_reporter_string_number");
  b.field("VALUE", name);
  return b;
}

SpriteB& SpriteB::variable(const std::string& id, const std::string& name,
                           const std::string& value) {
  variables_[id] = ojson::array({name, value});
  return *this;
}

SpriteB& SpriteB::list(const std::string& id, const std::string& name) {
  lists_[id] = ojson::array({name, ojson::array()});
  return *this;
}

SpriteB& SpriteB::broadcastDecl(const std::string& id, const std::string& name) {
  broadcasts_[id] = name;
  return *this;
}

SpriteB& SpriteB::costume(const std::string& name, const std::string& md5ext) {
  ojson c;
  c["name"] = name;
  c["dataFormat"] = "png";
  c["assetId"] = "0123456789abcdef0123456789abcdef";
  c["md5ext"] = md5ext.empty() ? name + ".png" : md5ext;
  costumes_.push_back(c);
  return *this;
}

SpriteB& SpriteB::sound(const std::string& name, const std::string& md5ext) {
  ojson s;
  s["name"] = name;
  s["dataFormat"] = "wav";
  s["assetId"] = "fedcba9876543210fedcba9876543210";
  s["md5ext"] = md5ext.empty() ? name + ".wav" : md5ext;
  sounds_.push_back(s);
  return *this;
}

SpriteB& SpriteB::hat(Blk hatBlock, std::vector<Blk> body) {
  ScriptSpec spec;
  spec.hat = std::move(hatBlock);
  spec.hasHat = true;
  spec.body = std::move(body);
  scripts_.push_back(std::move(spec));
  return *this;
}

SpriteB& SpriteB::greenFlag(std::vector<Blk> body) {
  return hat(stmt("event_whenflagclicked"), std::move(body));
}

SpriteB& SpriteB::whenKey(const std::string& key, std::vector<Blk> body) {
  return hat(stmt("event_whenkeypressed").field("KEY_OPTION", key),
             std::move(body));
}

SpriteB& SpriteB::whenClicked(std::vector<Blk> body) {
  return hat(stmt(isStage_ ? "event_whenstageclicked"
                           : "event_whenthisspriteclicked"),
             std::move(body));
}

SpriteB& SpriteB::whenBackdrop(const std::string& backdrop,
                               std::vector<Blk> body) {
  return hat(stmt("event_whenbackdropswitchesto").field("BACKDROP", backdrop),
             std::move(body));
}

SpriteB& SpriteB::whenReceive(const std::string& message,
                              const std::string& messageId,
                              std::vector<Blk> body) {
  return hat(
      stmt("event_whenbroadcastreceived").field("BROADCAST_OPTION", message, messageId),
      std::move(body));
}

SpriteB& SpriteB::whenClone(std::vector<Blk> body) {
  return hat(stmt("control_start_as_clone"), std::move(body));
}

SpriteB& SpriteB::loose(std::vector<Blk> body) {
  ScriptSpec spec;
  spec.hasHat = false;
  spec.body = std::move(body);
  scripts_.push_back(std::move(spec));
  return *this;
}

SpriteB& SpriteB::proc(const std::string& proccode, std::vector<ParamSpec> params,
                       std::vector<Blk> body, bool warp) {
  ScriptSpec spec;
  spec.isProcedure = true;
  spec.proccode = proccode;
  spec.params = std::move(params);
  spec.body = std::move(body);
  spec.warp = warp;
  scripts_.push_back(std::move(spec));
  return *this;
}

ProjectB::ProjectB() { sprites_.push_back(std::make_unique<SpriteB>("Stage", true)); }

SpriteB& ProjectB::stage() { return *sprites_.front(); }

SpriteB& ProjectB::sprite(const std::string& name) {
  sprites_.push_back(std::make_unique<SpriteB>(name, false));
  return *sprites_.back();
}

std::string ProjectB::json() { return document().dump(); }

nlohmann::ordered_json ProjectB::document() {
  ojson doc;
  doc["targets"] = ojson::array();
  for (auto& sprite : sprites_) doc["targets"].push_back(emitTarget(*sprite));
  doc["monitors"] = ojson::array();
  doc["extensions"] = ojson::array();
  doc["meta"] = {{"semver", "3.0.0"}, {"vm", "1.2.58"}, {"agent", ""}};
  return doc;
}

ojson ProjectB::emitTarget(SpriteB& sprite) {
  ojson target;
  target["isStage"] = sprite.isStage_;
  target["name"] = sprite.name_;
  target["variables"] = sprite.variables_;
  target["lists"] = sprite.lists_;
  target["broadcasts"] = sprite.broadcasts_;
  ojson blocks = ojson::object();

  int scriptIndex = 0;
  for (auto& spec : sprite.scripts_) {
    ++scriptIndex;
    if (spec.isProcedure) {
      // definition + prototype + argument reporters
      std::string defId = freshId();
      std::string protoId = freshId();
      ojson def;
      def["opcode"] = "procedures_definition";
      def["next"] = nullptr;
      def["parent"] = nullptr;
      def["inputs"] = {{"custom_block", ojson::array({1, protoId})}};
      def["fields"] = ojson::object();
      def["shadow"] = false;
      def["topLevel"] = true;
      def["x"] = 40 * scriptIndex;
      def["y"] = 300;

      ojson proto;
      proto["opcode"] = "procedures_prototype";
      proto["next"] = nullptr;
      proto["parent"] = defId;
      ojson protoInputs = ojson::object();
      ojson argIds = ojson::array();
      ojson argNames = ojson::array();
      ojson argDefaults = ojson::array();
      int argIndex = 0;
      for (const auto& param : spec.params) {
        ++argIndex;
        std::string argId = "arg" + std::to_string(argIndex);
        std::string reporterId = freshId();
        ojson reporter;
        reporter["opcode"] = param.kind == 'b' ? "argument_reporter_boolean"
                                               : "argument_reporter_string_number";
        reporter["next"] = nullptr;
        reporter["parent"] = protoId;
        reporter["inputs"] = ojson::object();
        reporter["fields"] = {{"VALUE", ojson::array({param.name, nullptr})}};
        reporter["shadow"] = true;
        reporter["topLevel"] = false;
        blocks[reporterId] = reporter;
        protoInputs[argId] = ojson::array({1, reporterId});
        argIds.push_back(argId);
        argNames.push_back(param.name);
        argDefaults.push_back(param.kind == 'b' ? "false" : "");
      }
      proto["inputs"] = protoInputs;
      proto["fields"] = ojson::object();
      proto["shadow"] = true;
      proto["topLevel"] = false;
      proto["mutation"] = {{"tagName", "mutation"},
                           {"children", ojson::array()},
                           {"proccode", spec.proccode},
                           {"argumentids", argIds.dump()},
                           {"argumentnames", argNames.dump()},
                           {"argumentdefaults", argDefaults.dump()},
                           {"warp", spec.warp ? "true" : "false"}};
      blocks[protoId] = proto;

      std::string firstBodyId = emitChain(blocks, spec.body, defId, false);
      def["next"] = firstBodyId.empty() ? ojson() : ojson(firstBodyId);
      blocks[defId] = def;
    } else if (spec.hasHat) {
      std::string hatId = emitBlock(blocks, spec.hat, "", true, false);
      std::string firstBodyId = emitChain(blocks, spec.body, hatId, false);
      blocks[hatId]["next"] = firstBodyId.empty() ? ojson() : ojson(firstBodyId);
      blocks[hatId]["x"] = 40 * scriptIndex;
      blocks[hatId]["y"] = 80;
    } else {
      std::string firstId = emitChain(blocks, spec.body, "", true);
      if (!firstId.empty()) {
        blocks[firstId]["x"] = 40 * scriptIndex;
        blocks[firstId]["y"] = 600;
      }
    }
  }
  target["blocks"] = blocks;
  target["comments"] = ojson::object();
  target["currentCostume"] = 0;
  target["costumes"] = sprite.costumes_;
  target["sounds"] = sprite.sounds_;
  target["volume"] = 100;
  if (sprite.isStage_) {
    target["layerOrder"] = 0;
    target["tempo"] = 60;
  } else {
    target["visible"] = true;
    target["x"] = 0;
    target["y"] = 0;
    target["size"] = 100;
    target["direction"] = 90;
    target["draggable"] = false;
    target["rotationStyle"] = "all around";
  }
  return target;
}

std::string ProjectB::emitChain(ojson& blocks, std::vector<Blk>& chain,
                                const std::string& parent, bool topLevel) {
  std::string firstId;
  std::string prevId;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::string id = emitBlock(blocks, chain[i], prevId.empty() ? parent : prevId,
                               topLevel && i == 0, false);
    if (i == 0)
      firstId = id;
    else
      blocks[prevId]["next"] = id;
    prevId = id;
  }
  return firstId;
}

std::string ProjectB::emitBlock(ojson& blocks, Blk& blk, const std::string& parent,
                                bool topLevel, bool shadow) {
  std::string id = blk.explicitId.empty() ? freshId() : blk.explicitId;
  ojson block;
  block["opcode"] = blk.opcode;
  block["next"] = nullptr;
  block["parent"] = parent.empty() ? ojson() : ojson(parent);
  ojson inputs = ojson::object();
  for (auto& [name, input] : blk.inputList) emitInput(blocks, inputs, id, name, input);
  if (blk.hasSub) {
    std::string firstId = emitChain(blocks, blk.sub, id, false);
    if (!firstId.empty()) inputs["SUBSTACK"] = ojson::array({2, firstId});
  }
  if (blk.hasSub2) {
    std::string firstId = emitChain(blocks, blk.sub2, id, false);
    if (!firstId.empty()) inputs["SUBSTACK2"] = ojson::array({2, firstId});
  }
  block["inputs"] = inputs;
  ojson fields = ojson::object();
  for (auto& [name, value] : blk.fieldList)
    fields[name] = value.second.empty() ? ojson::array({value.first, nullptr})
                                        : ojson::array({value.first, value.second});
  block["fields"] = fields;
  block["shadow"] = shadow;
  block["topLevel"] = topLevel;
  if (!blk.callProccode.empty()) {
    ojson argIds = ojson::array();
    for (auto& [name, input] : blk.inputList) argIds.push_back(name);
    block["mutation"] = {{"tagName", "mutation"},
                         {"children", ojson::array()},
                         {"proccode", blk.callProccode},
                         {"argumentids", argIds.dump()},
                         {"warp", "false"}};
  }
  blocks[id] = block;
  return id;
}

void ProjectB::emitInput(ojson& blocks, ojson& inputs, const std::string& ownerId,
                         const std::string& name, In& input) {
  switch (input.kind) {
    case In::Kind::Number:
      inputs[name] = ojson::array({1, ojson::array({4, input.text})});
      break;
    case In::Kind::Text:
      inputs[name] = ojson::array({1, ojson::array({10, input.text})});
      break;
    case In::Kind::Color:
      inputs[name] = ojson::array({1, ojson::array({9, input.text})});
      break;
    case In::Kind::VarRef:
      inputs[name] = ojson::array(
          {3, ojson::array({12, input.text, input.id2}), ojson::array({10, ""})});
      break;
    case In::Kind::ListRef:
      inputs[name] = ojson::array(
          {3, ojson::array({13, input.text, input.id2}), ojson::array({10, ""})});
      break;
    case In::Kind::BroadcastRef:
      inputs[name] = ojson::array({1, ojson::array({11, input.text, input.id2})});
      break;
    case In::Kind::Block: {
      std::string blockId = emitBlock(blocks, *input.block, ownerId, false, false);
      if (sb3lint::isBooleanReporterOpcode(input.block->opcode))
        inputs[name] = ojson::array({2, blockId});
      else
        inputs[name] =
            ojson::array({3, blockId, ojson::array({10, ""})});
      break;
    }
    case In::Kind::Menu: {
      Blk menuBlk = stmt(input.menuOpcode);
      menuBlk.field(input.menuField, input.text);
      std::string menuId = emitBlock(blocks, menuBlk, ownerId, false, true);
      inputs[name] = ojson::array({1, menuId});
      break;
    }
    case In::Kind::EmptyBoolNull:
      inputs[name] = ojson::array({2, nullptr});
      break;
    case In::Kind::Absent:
      break;
  }
}

}  // namespace testsupport
