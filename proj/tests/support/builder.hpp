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
// Fixture builder: composes Scratch 3.0 project.json documents the same
// way the editor serializes them, so parser tests run against realistic
// input. Block ids are deterministic ("b1", "b2", ...) unless set
// explicitly with withId().

#ifndef SB3LINT_TESTS_SUPPORT_BUILDER_HPP
#define SB3LINT_TESTS_SUPPORT_BUILDER_HPP

#include <json.hpp>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

struct Blk;

struct In {
  enum class Kind {
    Number,
    Text,
    Color,
    VarRef,
    ListRef,
    BroadcastRef,
    Block,
    Menu,
    EmptyBoolNull,  // serialized as [2, null]
    Absent          // input key omitted entirely
  };
  Kind kind = Kind::Text;
  std::string text;
  std::string id2;
  std::string menuOpcode;
  std::string menuField;
  std::shared_ptr<Blk> block;
};

In num(double value);
In num(const std::string& value);
In txt(std::string value);
In color(std::string hex);
In varRef(std::string name, std::string id);
In listRefIn(std::string name, std::string id);
In broadcastIn(std::string name, std::string id);
In blockIn(Blk reporter);
In menu(std::string menuOpcode, std::string fieldName, std::string value);
In emptyBoolNull();
In absent();

struct Blk {
  std::string opcode;
  std::string explicitId;
  std::vector<std::pair<std::string, In>> inputList;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> fieldList;
  std::vector<Blk> sub;
  std::vector<Blk> sub2;
  bool hasSub = false;
  bool hasSub2 = false;
  std::string callProccode;  // procedures_call

  Blk& in(const std::string& name, In input) {
    inputList.emplace_back(name, std::move(input));
    return *this;
  }
  Blk& field(const std::string& name, const std::string& value,
             const std::string& id = "") {
    fieldList.emplace_back(name, std::make_pair(value, id));
    return *this;
  }
  Blk& body(std::vector<Blk> statements) {
    sub = std::move(statements);
    hasSub = true;
    return *this;
  }
  Blk& els(std::vector<Blk> statements) {
    sub2 = std::move(statements);
    hasSub2 = true;
    return *this;
  }
  Blk& withId(std::string id) {
    explicitId = std::move(id);
    return *this;
  }
};

Blk stmt(std::string opcode);
Blk rep(std::string opcode);
Blk call(std::string proccode, std::vector<In> args = {});

// Common reporters.
Blk cmp(const char* op, In left, In right);  // op: "equals" | "lt" | "gt"
Blk boolOp(const char* op, In left, In right);  // "and" | "or"
Blk boolNot(In operand);
Blk answer();
Blk paramRef(std::string name, bool boolean = false);

struct ParamSpec {
  std::string name;
  char kind = 's';  // 's' string/number, 'b' boolean
};

class SpriteB {
 public:
  SpriteB(std::string name, bool isStage) : name_(std::move(name)), isStage_(isStage) {}

  SpriteB& variable(const std::string& id, const std::string& name,
                    const std::string& value = "0");
  SpriteB& list(const std::string& id, const std::string& name);
  SpriteB& broadcastDecl(const std::string& id, const std::string& name);
  SpriteB& costume(const std::string& name, const std::string& md5ext = "");
  SpriteB& sound(const std::string& name, const std::string& md5ext = "");

  SpriteB& hat(Blk hatBlock, std::vector<Blk> body);
  SpriteB& greenFlag(std::vector<Blk> body);
  SpriteB& whenKey(const std::string& key, std::vector<Blk> body);
  SpriteB& whenClicked(std::vector<Blk> body);
  SpriteB& whenBackdrop(const std::string& backdrop, std::vector<Blk> body);
  SpriteB& whenReceive(const std::string& message, const std::string& messageId,
                       std::vector<Blk> body);
  SpriteB& whenClone(std::vector<Blk> body);
  SpriteB& loose(std::vector<Blk> body);
  SpriteB& proc(const std::string& proccode, std::vector<ParamSpec> params,
                std::vector<Blk> body, bool warp = false);

  const std::string& name() const { return name_; }

 private:
  friend class ProjectB;

  struct ScriptSpec {
    bool isProcedure = false;
    Blk hat;                 // unused for procedures
    bool hasHat = false;     // loose scripts have none
    std::vector<Blk> body;
    std::string proccode;
    std::vector<ParamSpec> params;
    bool warp = false;
  };

  std::string name_;
  bool isStage_ = false;
  nlohmann::ordered_json variables_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json lists_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json broadcasts_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json costumes_ = nlohmann::ordered_json::array();
  nlohmann::ordered_json sounds_ = nlohmann::ordered_json::array();
  std::vector<ScriptSpec> scripts_;
};

class ProjectB {
 public:
  ProjectB();
  SpriteB& stage();
  SpriteB& sprite(const std::string& name);

  // Serialized project.json text.
  std::string json();
  nlohmann::ordered_json document();

 private:
  std::string freshId() { return "b" + std::to_string(++counter_); }
  nlohmann::ordered_json emitTarget(SpriteB& sprite);
  std::string emitChain(nlohmann::ordered_json& blocks, std::vector<Blk>& chain,
                        const std::string& parent, bool topLevel);
  std::string emitBlock(nlohmann::ordered_json& blocks, Blk& blk,
                        const std::string& parent, bool topLevel, bool shadow);
  void emitInput(nlohmann::ordered_json& blocks, nlohmann::ordered_json& inputs,
                 const std::string& ownerId, const std::string& name, In& input);

  std::vector<std::unique_ptr<SpriteB>> sprites_;
  int counter_ = 0;
};

}  // namespace testsupport

#endif  // SB3LINT_TESTS_SUPPORT_BUILDER_HPP
