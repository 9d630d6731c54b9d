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
// Positive and clean fixtures for the code-smell finders, plus independent
// brute-force oracles for the duplication rules.

#include <doctest.h>

#include <set>

#include "support/builder.hpp"
#include "support/findercheck.hpp"

using namespace sb3lint;
using namespace testsupport;

namespace {

// Test-side structural equality, written independently of the library's
// normalized-form serialization.
bool exprEq(const Expression& a, const Expression& b);

bool fieldsEq(const std::map<std::string, Field>& a,
              const std::map<std::string, Field>& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.value != ib->second.value)
      return false;
  return true;
}

bool exprEq(const Expression& a, const Expression& b) {
  if (a.kind != b.kind || a.opcode != b.opcode) return false;
  if (a.kind == ExpressionKind::NumberLiteral && a.number != b.number) return false;
  if (a.text != b.text) return false;
  if (a.comparison != b.comparison || a.boolOp != b.boolOp) return false;
  if (!fieldsEq(a.fields, b.fields)) return false;
  if (a.operands.size() != b.operands.size()) return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i)
    if (!exprEq(a.operands[i], b.operands[i])) return false;
  return true;
}

bool stmtEq(const Statement& a, const Statement& b) {
  if (a.kind != b.kind || a.opcode != b.opcode) return false;
  if (a.stopTarget != b.stopTarget || a.proccode != b.proccode) return false;
  if (!fieldsEq(a.fields, b.fields)) return false;
  if (a.inputs.size() != b.inputs.size()) return false;
  for (std::size_t i = 0; i < a.inputs.size(); ++i)
    if (!exprEq(a.inputs[i], b.inputs[i])) return false;
  if (a.subStacks.size() != b.subStacks.size()) return false;
  for (std::size_t i = 0; i < a.subStacks.size(); ++i) {
    if (a.subStacks[i].size() != b.subStacks[i].size()) return false;
    for (std::size_t j = 0; j < a.subStacks[i].size(); ++j)
      if (!stmtEq(a.subStacks[i].statements[j], b.subStacks[i].statements[j]))
        return false;
  }
  return true;
}

bool scriptEq(const Script& a, const Script& b) {
  if (!(a.event == b.event)) return false;
  if (a.body.size() != b.body.size()) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (!stmtEq(a.body.statements[i], b.body.statements[i])) return false;
  return true;
}

void forEachList(const StatementList& list,
                 const std::function<void(const StatementList&)>& fn) {
  fn(list);
  for (const Statement& s : list.statements)
    for (const StatementList& sub : s.subStacks) forEachList(sub, fn);
}

}  // namespace

TEST_CASE("busy_waiting") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_forever")
           .withId("busy")
           .body({stmt("control_if")
                      .in("CONDITION", blockIn(rep("sensing_mousedown")))
                      .body({stmt("control_stop").field("STOP_OPTION", "this script")})})});
  expectIssues(analyze(bad), "busy_waiting", {{"busy"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_forever")
           .body({stmt("control_if")
                      .in("CONDITION", blockIn(rep("sensing_mousedown")))
                      .body({stmt("looks_show")})})});
  expectNone(analyze(clean), "busy_waiting");
}

TEST_CASE("code_lying_around") {
  ProjectB bad;
  bad.sprite("Cat").loose(
      {stmt("motion_movesteps").withId("loose1").in("STEPS", num(10)),
       stmt("looks_show")});
  expectIssues(analyze(bad), "code_lying_around", {{"loose1"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("looks_show")});
  expectNone(analyze(clean), "code_lying_around");
}

TEST_CASE("double_if with brute-force oracle") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_if")
           .withId("ifa")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("looks_show")}),
       stmt("control_if")
           .withId("ifb")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("looks_hide")})});
  Analysis a = analyze(bad);
  expectIssues(a, "double_if", {{"ifa", "ifb"}});

  // Oracle: sliding window over every statement list.
  std::size_t expected = 0;
  for (const ActorDefinition* actor : a.program.actors()) {
    for (const Script& script : actor->scripts) {
      forEachList(script.body, [&](const StatementList& list) {
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
          const Statement& x = list.statements[i];
          const Statement& y = list.statements[i + 1];
          if (x.kind == StatementKind::IfThen && y.kind == StatementKind::IfThen &&
              x.input("CONDITION") != nullptr && y.input("CONDITION") != nullptr &&
              exprEq(*x.input("CONDITION"), *y.input("CONDITION")))
            ++expected;
        }
      });
    }
  }
  CHECK(issuesOf(a, "double_if").size() == expected);

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_if")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("looks_show")}),
       stmt("control_if")
           .in("CONDITION",
               blockIn(rep("sensing_keypressed")
                           .in("KEY_OPTION", menu("sensing_keyoptions", "KEY_OPTION", "space"))))
           .body({stmt("looks_hide")})});
  expectNone(analyze(clean), "double_if");
}

TEST_CASE("duplicate_sprite") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({stmt("motion_movesteps").in("STEPS", num(10))});
  bad.sprite("Dog").greenFlag({stmt("motion_movesteps").in("STEPS", num(10))});
  Analysis a = analyze(bad);
  expectIssues(a, "duplicate_sprite", {{a.program.sprites[0].scripts[0].topBlockId}});
  CHECK(issuesOf(a, "duplicate_sprite")[0]->hintParams.at("other") == "Dog");

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("motion_movesteps").in("STEPS", num(10))});
  clean.sprite("Dog").greenFlag({stmt("motion_movesteps").in("STEPS", num(20))});
  expectNone(analyze(clean), "duplicate_sprite");
}

TEST_CASE("duplicated_script with brute-force oracle") {
  ProjectB bad;
  bad.sprite("Cat")
      .greenFlag({stmt("motion_movesteps").in("STEPS", num(10))})
      .greenFlag({stmt("motion_movesteps").in("STEPS", num(10))});
  Analysis a = analyze(bad);
  const auto& scripts = a.program.sprites[0].scripts;
  expectIssues(a, "duplicated_script", {{scripts[0].topBlockId, scripts[1].topBlockId}});

  // Oracle: exhaustive pairwise comparison within each actor.
  std::size_t expected = 0;
  for (const ActorDefinition* actor : a.program.actors())
    for (std::size_t i = 0; i < actor->scripts.size(); ++i)
      for (std::size_t j = i + 1; j < actor->scripts.size(); ++j)
        if (actor->scripts[i].event.kind != EventKind::NEVER &&
            scriptEq(actor->scripts[i], actor->scripts[j]))
          ++expected;
  CHECK(issuesOf(a, "duplicated_script").size() == expected);

  // Same scripts in different sprites: not this finder's business.
  ProjectB acrossSprites;
  acrossSprites.sprite("Cat").greenFlag({stmt("motion_movesteps").in("STEPS", num(10))});
  acrossSprites.sprite("Dog").greenFlag({stmt("motion_movesteps").in("STEPS", num(10))});
  expectNone(analyze(acrossSprites), "duplicated_script");

  // A differing literal breaks exactness.
  ProjectB literals;
  literals.sprite("Cat")
      .greenFlag({stmt("motion_movesteps").in("STEPS", num(10))})
      .greenFlag({stmt("motion_movesteps").in("STEPS", num(20))});
  expectNone(analyze(literals), "duplicated_script");
}

TEST_CASE("empty_control_body") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_if")
           .withId("emptyif")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))});
  expectIssues(analyze(bad), "empty_control_body", {{"emptyif"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_if")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("looks_show")})});
  expectNone(analyze(clean), "empty_control_body");
}

TEST_CASE("empty_custom_block") {
  ProjectB bad;
  bad.sprite("Cat").proc("noop", {}, {}).greenFlag({call("noop")});
  Analysis a = analyze(bad);
  expectIssues(a, "empty_custom_block",
               {{a.program.sprites[0].procedures[0].definitionBlockId}});

  ProjectB clean;
  clean.sprite("Cat").proc("noop", {}, {stmt("looks_show")}).greenFlag({call("noop")});
  expectNone(analyze(clean), "empty_custom_block");
}

TEST_CASE("empty_project reports exactly one issue on the empty project") {
  ProjectB empty;
  empty.stage();
  Analysis a = analyze(empty);
  REQUIRE(a.result.issues.size() == 1);
  CHECK(a.result.issues[0].finderId == "empty_project");
  CHECK(a.result.issues[0].blockIds.empty());

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("looks_show")});
  expectNone(analyze(clean), "empty_project");
}

TEST_CASE("empty_script") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({});
  Analysis a = analyze(bad);
  expectIssues(a, "empty_script", {{a.program.sprites[0].scripts[0].topBlockId}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("looks_show")});
  expectNone(analyze(clean), "empty_script");
}

TEST_CASE("empty_sprite") {
  ProjectB bad;
  bad.sprite("Empty");
  bad.sprite("Cat").greenFlag({stmt("looks_show")});
  Analysis a = analyze(bad);
  auto issues = issuesOf(a, "empty_sprite");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0]->actorName == "Empty");
  CHECK(issues[0]->blockIds.empty());

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("looks_show")});
  expectNone(analyze(clean), "empty_sprite");
}

TEST_CASE("long_script boundary at the threshold") {
  auto scriptWith = [](int statements) {
    ProjectB project;
    std::vector<Blk> body;
    for (int i = 0; i < statements; ++i)
      body.push_back(stmt("looks_say").in("MESSAGE", txt("line " + std::to_string(i))));
    project.sprite("Cat").greenFlag(std::move(body));
    return project;
  };
  // hat + 12 statements = 13 blocks: long.
  ProjectB long13 = scriptWith(12);
  Analysis a = analyze(long13);
  expectIssues(a, "long_script", {{a.program.sprites[0].scripts[0].topBlockId}});
  CHECK(issuesOf(a, "long_script")[0]->hintParams.at("length") == "13");

  // hat + 11 statements = 12 blocks: fine.
  ProjectB fine12 = scriptWith(11);
  expectNone(analyze(fine12), "long_script");
}

TEST_CASE("message_naming") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("event_broadcast").withId("bc1").in("BROADCAST_INPUT", broadcastIn("message1", "m1")),
       stmt("event_broadcast").withId("bc2").in("BROADCAST_INPUT", broadcastIn("x", "m2"))});
  bad.sprite("Dog")
      .whenReceive("message1", "m1", {stmt("looks_show")})
      .whenReceive("x", "m2", {stmt("looks_hide")});
  Analysis a = analyze(bad);
  auto issues = issuesOf(a, "message_naming");
  CHECK(issues.size() == 2);

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("event_broadcast").in("BROADCAST_INPUT", broadcastIn("game over", "m1"))});
  clean.sprite("Dog").whenReceive("game over", "m1", {stmt("looks_show")});
  expectNone(analyze(clean), "message_naming");
}

TEST_CASE("middle_man") {
  ProjectB bad;
  bad.sprite("Cat")
      .whenReceive("a", "bcA",
                   {stmt("event_broadcast").withId("fwd").in("BROADCAST_INPUT", broadcastIn("b", "bcB"))})
      .whenReceive("b", "bcB", {stmt("looks_show"), stmt("looks_hide")})
      .greenFlag({stmt("event_broadcast").in("BROADCAST_INPUT", broadcastIn("a", "bcA"))});
  expectIssues(analyze(bad), "middle_man", {{"fwd"}});

  ProjectB procChain;
  procChain.sprite("Cat")
      .proc("outer", {}, {call("inner").withId("innercall")})
      .proc("inner", {}, {stmt("looks_show")})
      .greenFlag({call("outer")});
  expectIssues(analyze(procChain), "middle_man", {{"innercall"}});

  ProjectB clean;
  clean.sprite("Cat")
      .whenReceive("a", "bcA",
                   {stmt("looks_show"),
                    stmt("event_broadcast").in("BROADCAST_INPUT", broadcastIn("b", "bcB"))})
      .whenReceive("b", "bcB", {stmt("looks_hide")})
      .greenFlag({stmt("event_broadcast").in("BROADCAST_INPUT", broadcastIn("a", "bcA"))});
  expectNone(analyze(clean), "middle_man");
}

TEST_CASE("multi_attribute_modification") {
  ProjectB bad;
  bad.sprite("Cat").variable("v1", "score").greenFlag(
      {stmt("data_setvariableto").withId("s1").field("VARIABLE", "score", "v1").in("VALUE", num(1)),
       stmt("data_setvariableto").withId("s2").field("VARIABLE", "score", "v1").in("VALUE", num(2))});
  expectIssues(analyze(bad), "multi_attribute_modification", {{"s1", "s2"}});

  ProjectB clean;
  clean.sprite("Cat").variable("v1", "score").variable("v2", "lives").greenFlag(
      {stmt("data_setvariableto").field("VARIABLE", "score", "v1").in("VALUE", num(1)),
       stmt("data_setvariableto").field("VARIABLE", "lives", "v2").in("VALUE", num(3))});
  expectNone(analyze(clean), "multi_attribute_modification");
}

TEST_CASE("nested_loops") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_forever")
           .withId("outer")
           .body({stmt("control_repeat")
                      .in("TIMES", num(10))
                      .body({stmt("motion_movesteps").in("STEPS", num(1))})})});
  expectIssues(analyze(bad), "nested_loops", {{"outer"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_forever")
           .body({stmt("control_repeat")
                      .in("TIMES", num(10))
                      .body({stmt("motion_movesteps").in("STEPS", num(1))}),
                  stmt("looks_nextcostume")})});
  expectNone(analyze(clean), "nested_loops");
}

TEST_CASE("same_variable_different_sprite") {
  ProjectB bad;
  bad.sprite("Cat").variable("v1", "health").greenFlag({stmt("looks_show")});
  bad.sprite("Dog").variable("v2", "health").greenFlag({stmt("looks_hide")});
  Analysis a = analyze(bad);
  auto issues = issuesOf(a, "same_variable_different_sprite");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0]->hintParams.at("name") == "health");

  // A stage global plus one local does not count: the scopes differ.
  ProjectB clean;
  clean.stage().variable("g1", "health");
  clean.sprite("Cat").variable("v1", "health").greenFlag({stmt("looks_show")});
  expectNone(analyze(clean), "same_variable_different_sprite");
}

TEST_CASE("sequential_actions with brute-force oracle") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("motion_movesteps").withId("m1").in("STEPS", num(10)),
       stmt("motion_movesteps").withId("m2").in("STEPS", num(10)),
       stmt("motion_movesteps").withId("m3").in("STEPS", num(10))});
  Analysis a = analyze(bad);
  expectIssues(a, "sequential_actions", {{"m1", "m2", "m3"}});

  // Oracle: maximal equal runs over every list, sliding window.
  std::size_t expected = 0;
  for (const ActorDefinition* actor : a.program.actors()) {
    for (const Script& script : actor->scripts) {
      forEachList(script.body, [&](const StatementList& list) {
        std::size_t i = 0;
        while (i < list.size()) {
          std::size_t j = i + 1;
          while (j < list.size() && list.statements[j].subStacks.empty() &&
                 list.statements[i].subStacks.empty() &&
                 stmtEq(list.statements[i], list.statements[j]))
            ++j;
          if (j - i >= 3) ++expected;
          i = j;
        }
      });
    }
  }
  CHECK(issuesOf(a, "sequential_actions").size() == expected);

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("motion_movesteps").in("STEPS", num(10)),
       stmt("motion_movesteps").in("STEPS", num(10))});
  expectNone(analyze(clean), "sequential_actions");
}

TEST_CASE("sprite_naming") {
  ProjectB bad;
  bad.sprite("Sprite1").greenFlag({stmt("looks_show")});
  bad.sprite("Figur2").greenFlag({stmt("looks_show")});
  Analysis a = analyze(bad);
  CHECK(issuesOf(a, "sprite_naming").size() == 2);

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("looks_show")});
  expectNone(analyze(clean), "sprite_naming");
}

TEST_CASE("unnecessary_if_after_until") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_repeat_until")
           .withId("until")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("motion_movesteps").in("STEPS", num(1))}),
       stmt("control_if")
           .withId("if1")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("looks_show")})});
  expectIssues(analyze(bad), "unnecessary_if_after_until", {{"until", "if1"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_repeat_until")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("motion_movesteps").in("STEPS", num(1))}),
       stmt("control_if")
           .in("CONDITION",
               blockIn(rep("sensing_keypressed")
                           .in("KEY_OPTION", menu("sensing_keyoptions", "KEY_OPTION", "space"))))
           .body({stmt("looks_show")})});
  expectNone(analyze(clean), "unnecessary_if_after_until");
}

TEST_CASE("unnecessary_loop") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_repeat")
           .withId("rep1")
           .in("TIMES", num(1))
           .body({stmt("motion_movesteps").in("STEPS", num(1))}),
       stmt("control_repeat")
           .withId("rep0")
           .in("TIMES", num(0))
           .body({stmt("looks_show")})});
  expectIssues(analyze(bad), "unnecessary_loop", {{"rep1"}, {"rep0"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_repeat")
           .in("TIMES", num(2))
           .body({stmt("motion_movesteps").in("STEPS", num(1))})});
  expectNone(analyze(clean), "unnecessary_loop");
}

TEST_CASE("unused_custom_block") {
  ProjectB bad;
  bad.sprite("Cat").proc("helper", {}, {stmt("looks_show")});
  Analysis a = analyze(bad);
  expectIssues(a, "unused_custom_block",
               {{a.program.sprites[0].procedures[0].definitionBlockId}});

  ProjectB clean;
  clean.sprite("Cat").proc("helper", {}, {stmt("looks_show")}).greenFlag({call("helper")});
  expectNone(analyze(clean), "unused_custom_block");
}

TEST_CASE("unused_parameter") {
  ProjectB bad;
  bad.sprite("Cat").proc("f %s", {{"x", 's'}}, {stmt("looks_show")}).greenFlag(
      {call("f %s", {num(1)})});
  Analysis a = analyze(bad);
  expectIssues(a, "unused_parameter",
               {{a.program.sprites[0].procedures[0].definitionBlockId}});

  ProjectB clean;
  clean.sprite("Cat")
      .proc("f %s", {{"x", 's'}},
            {stmt("looks_say").in("MESSAGE", blockIn(paramRef("x")))})
      .greenFlag({call("f %s", {num(1)})});
  expectNone(analyze(clean), "unused_parameter");
}

TEST_CASE("unused_variable") {
  ProjectB bad;
  bad.sprite("Cat").variable("v1", "deadvar").greenFlag({stmt("looks_show")});
  Analysis a = analyze(bad);
  auto issues = issuesOf(a, "unused_variable");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0]->hintParams.at("name") == "deadvar");
  CHECK(issues[0]->blockIds.empty());

  ProjectB clean;
  clean.sprite("Cat").variable("v1", "score").greenFlag(
      {stmt("looks_say").in("MESSAGE", varRef("score", "v1"))});
  expectNone(analyze(clean), "unused_variable");
}

TEST_CASE("variable_initialization_race") {
  ProjectB bad;
  bad.sprite("Cat")
      .variable("v1", "score")
      .greenFlag({stmt("data_setvariableto").withId("setA").field("VARIABLE", "score", "v1").in("VALUE", num(0))})
      .greenFlag({stmt("data_setvariableto").withId("setB").field("VARIABLE", "score", "v1").in("VALUE", num(1))});
  expectIssues(analyze(bad), "variable_initialization_race", {{"setA", "setB"}});

  // Same value twice: no race worth reporting.
  ProjectB agree;
  agree.sprite("Cat")
      .variable("v1", "score")
      .greenFlag({stmt("data_setvariableto").field("VARIABLE", "score", "v1").in("VALUE", num(0))})
      .greenFlag({stmt("data_setvariableto").field("VARIABLE", "score", "v1").in("VALUE", num(0))});
  expectNone(analyze(agree), "variable_initialization_race");

  // Different events cannot race.
  ProjectB different;
  different.sprite("Cat")
      .variable("v1", "score")
      .greenFlag({stmt("data_setvariableto").field("VARIABLE", "score", "v1").in("VALUE", num(0))})
      .whenKey("space", {stmt("data_setvariableto").field("VARIABLE", "score", "v1").in("VALUE", num(1))});
  expectNone(analyze(different), "variable_initialization_race");
}

TEST_CASE("cloned_code: types 1, 2 and 3") {
  auto sixMoves = [](double base) {
    std::vector<Blk> body;
    for (int i = 0; i < 6; ++i)
      body.push_back(stmt("motion_movesteps").in("STEPS", num(base)));
    return body;
  };

  // Type 1: token-identical runs in two scripts of one sprite.
  ProjectB type1;
  type1.sprite("Cat").greenFlag(sixMoves(10)).whenKey("space", sixMoves(10));
  Analysis a1 = analyze(type1);
  auto issues1 = issuesOf(a1, "cloned_code");
  REQUIRE(issues1.size() == 1);
  CHECK(issues1[0]->hintParams.at("type") == "1");
  CHECK(issues1[0]->hintParams.at("length") == "6");

  // Type 2: same opcodes, renamed literals.
  ProjectB type2;
  type2.sprite("Cat").greenFlag(sixMoves(10)).whenKey("space", sixMoves(20));
  Analysis a2 = analyze(type2);
  auto issues2 = issuesOf(a2, "cloned_code");
  REQUIRE(issues2.size() == 1);
  CHECK(issues2[0]->hintParams.at("type") == "2");

  // Type 3: one substituted statement inside a run of seven.
  ProjectB type3;
  std::vector<Blk> left = sixMoves(10);
  left.insert(left.begin() + 3, stmt("looks_show"));
  std::vector<Blk> right = sixMoves(10);
  right.insert(right.begin() + 3, stmt("looks_hide"));
  type3.sprite("Cat").greenFlag(std::move(left)).whenKey("space", std::move(right));
  Analysis a3 = analyze(type3);
  auto issues3 = issuesOf(a3, "cloned_code");
  REQUIRE(issues3.size() == 1);
  CHECK(issues3[0]->hintParams.at("type") == "3");
  CHECK(issues3[0]->hintParams.at("length") == "7");

  // Five identical statements stay below the reporting length.
  ProjectB tooShort;
  std::vector<Blk> five1, five2;
  for (int i = 0; i < 5; ++i) {
    five1.push_back(stmt("motion_movesteps").in("STEPS", num(10)));
    five2.push_back(stmt("motion_movesteps").in("STEPS", num(10)));
  }
  tooShort.sprite("Cat").greenFlag(std::move(five1)).whenKey("space", std::move(five2));
  expectNone(analyze(tooShort), "cloned_code");
}

TEST_CASE("cloned_code across sprites anchors in the first sprite") {
  std::vector<Blk> body1, body2;
  for (int i = 0; i < 6; ++i) {
    body1.push_back(stmt("looks_say").in("MESSAGE", txt("line " + std::to_string(i))));
    body2.push_back(stmt("looks_say").in("MESSAGE", txt("line " + std::to_string(i))));
  }
  ProjectB project;
  project.sprite("Cat").greenFlag(std::move(body1));
  project.sprite("Dog").greenFlag(std::move(body2));
  Analysis a = analyze(project);
  auto issues = issuesOf(a, "cloned_code");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0]->actorName == "Cat");
  CHECK(issues[0]->hintParams.at("otherSprite") == "Dog");
  REQUIRE(issues[0]->blockIds.size() == 1);
}
