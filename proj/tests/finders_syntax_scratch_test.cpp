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
// Positive and clean fixtures for the syntax-error and Scratch-bug
// finders. Each positive fixture pins the exact offending block ids.

#include <doctest.h>

#include "sb3lint/zip.hpp"
#include "support/builder.hpp"
#include "support/findercheck.hpp"

using namespace sb3lint;
using namespace testsupport;

TEST_CASE("ambiguous_custom_block_signature") {
  ProjectB bad;
  bad.sprite("Cat")
      .proc("do it", {}, {stmt("looks_show")})
      .proc("do it", {}, {stmt("looks_hide")});
  Analysis a = analyze(bad);
  const auto& procs = a.program.sprites[0].procedures;
  expectIssues(a, "ambiguous_custom_block_signature",
               {{procs[0].definitionBlockId, procs[1].definitionBlockId}});

  ProjectB clean;
  clean.sprite("Cat").proc("do it", {}, {stmt("looks_show")}).proc("undo it", {}, {});
  expectNone(analyze(clean), "ambiguous_custom_block_signature");
}

TEST_CASE("ambiguous_parameter_name") {
  ProjectB bad;
  bad.sprite("Cat").proc("f %s %s", {{"x", 's'}, {"x", 's'}},
                         {stmt("looks_show")});
  Analysis a = analyze(bad);
  expectIssues(a, "ambiguous_parameter_name",
               {{a.program.sprites[0].procedures[0].definitionBlockId}});

  ProjectB clean;
  clean.sprite("Cat").proc("f %s %s", {{"x", 's'}, {"y", 's'}}, {stmt("looks_show")});
  expectNone(analyze(clean), "ambiguous_parameter_name");
}

TEST_CASE("call_without_definition") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({call("ghost").withId("thecall")});
  expectIssues(analyze(bad), "call_without_definition", {{"thecall"}});

  ProjectB clean;
  clean.sprite("Cat").proc("ghost", {}, {stmt("looks_show")}).greenFlag({call("ghost")});
  expectNone(analyze(clean), "call_without_definition");
}

TEST_CASE("expression_as_touching_or_color") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_if")
           .in("CONDITION",
               blockIn(rep("sensing_touchingcolor")
                           .in("COLOR", blockIn(rep("motion_xposition").withId("xpos")))))
           .body({stmt("looks_show")})});
  expectIssues(analyze(bad), "expression_as_touching_or_color", {{"xpos"}});

  ProjectB bad2;
  bad2.sprite("Cat").greenFlag(
      {stmt("control_if")
           .in("CONDITION",
               blockIn(rep("sensing_touchingobject")
                           .in("TOUCHINGOBJECTMENU", blockIn(answer().withId("ans")))))
           .body({stmt("looks_show")})});
  // missing_ask also fires here; this finder anchors at the answer block.
  expectIssues(analyze(bad2), "expression_as_touching_or_color", {{"ans"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_if")
           .in("CONDITION", blockIn(rep("sensing_touchingcolor").in("COLOR", color("#ff0000"))))
           .body({stmt("looks_show")}),
       stmt("control_if")
           .in("CONDITION",
               blockIn(rep("sensing_touchingobject")
                           .in("TOUCHINGOBJECTMENU",
                               menu("sensing_touchingobjectmenu", "TOUCHINGOBJECTMENU",
                                    "_mouse_"))))
           .body({stmt("looks_show")})});
  expectNone(analyze(clean), "expression_as_touching_or_color");
}

TEST_CASE("illegal_parameter_refactor") {
  ProjectB bad;
  bad.sprite("Cat").proc(
      "f %s", {{"num", 's'}},
      {stmt("control_if")
           .in("CONDITION", blockIn(paramRef("num").withId("badref")))
           .body({stmt("looks_show")})});
  expectIssues(analyze(bad), "illegal_parameter_refactor", {{"badref"}});

  ProjectB clean;
  clean.sprite("Cat").proc(
      "f %b", {{"flag", 'b'}},
      {stmt("control_if")
           .in("CONDITION", blockIn(paramRef("flag", true)))
           .body({stmt("looks_show")})});
  expectNone(analyze(clean), "illegal_parameter_refactor");
}

TEST_CASE("missing_termination_condition") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("control_repeat_until").withId("until").body({stmt("looks_show")})});
  expectIssues(analyze(bad), "missing_termination_condition", {{"until"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_repeat_until")
           .in("CONDITION", blockIn(rep("sensing_mousedown")))
           .body({stmt("looks_show")})});
  expectNone(analyze(clean), "missing_termination_condition");
}

TEST_CASE("missing_wait_until_condition") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({stmt("control_wait_until").withId("wait")});
  expectIssues(analyze(bad), "missing_wait_until_condition", {{"wait"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag(
      {stmt("control_wait_until").in("CONDITION", blockIn(rep("sensing_mousedown")))});
  expectNone(analyze(clean), "missing_wait_until_condition");
}

TEST_CASE("orphaned_parameter") {
  ProjectB bad;
  bad.sprite("Cat").proc(
      "p", {},
      {stmt("looks_say").in("MESSAGE", blockIn(paramRef("ghost").withId("orphan")))});
  expectIssues(analyze(bad), "orphaned_parameter", {{"orphan"}});

  ProjectB clean;
  clean.sprite("Cat").proc(
      "p %s", {{"x", 's'}},
      {stmt("looks_say").in("MESSAGE", blockIn(paramRef("x")))});
  expectNone(analyze(clean), "orphaned_parameter");
}

TEST_CASE("parameter_out_of_scope") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag(
      {stmt("looks_say").in("MESSAGE", blockIn(paramRef("x").withId("stray")))});
  expectIssues(analyze(bad), "parameter_out_of_scope", {{"stray"}});

  ProjectB clean;
  clean.sprite("Cat").proc(
      "p %s", {{"x", 's'}},
      {stmt("looks_say").in("MESSAGE", blockIn(paramRef("x")))});
  expectNone(analyze(clean), "parameter_out_of_scope");
}

TEST_CASE("missing_backdrop_switch") {
  ProjectB bad;
  bad.sprite("Cat").whenBackdrop("moon", {stmt("looks_show")});
  Analysis a = analyze(bad);
  expectIssues(a, "missing_backdrop_switch",
               {{a.program.sprites[0].scripts[0].topBlockId}});

  ProjectB clean;
  clean.stage().costume("moon");
  clean.sprite("Cat")
      .whenBackdrop("moon", {stmt("looks_show")})
      .greenFlag({stmt("looks_switchbackdropto")
                      .in("BACKDROP", menu("looks_backdrops", "BACKDROP", "moon"))});
  expectNone(analyze(clean), "missing_backdrop_switch");
}

TEST_CASE("missing_erase_all") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({stmt("pen_penDown").withId("pd")});
  expectIssues(analyze(bad), "missing_erase_all", {{"pd"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("pen_clear"), stmt("pen_penDown"), stmt("pen_penUp")});
  expectNone(analyze(clean), "missing_erase_all");
}

TEST_CASE("missing_pen_down") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({stmt("pen_penUp").withId("pu")});
  expectIssues(analyze(bad), "missing_pen_down", {{"pu"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("pen_clear"), stmt("pen_penDown"), stmt("pen_penUp")});
  expectNone(analyze(clean), "missing_pen_down");
}

TEST_CASE("missing_pen_up") {
  ProjectB bad;
  bad.sprite("Cat").greenFlag({stmt("pen_clear"), stmt("pen_penDown").withId("pd")});
  expectIssues(analyze(bad), "missing_pen_up", {{"pd"}});

  ProjectB clean;
  clean.sprite("Cat").greenFlag({stmt("pen_clear"), stmt("pen_penDown"), stmt("pen_penUp")});
  expectNone(analyze(clean), "missing_pen_up");
}

TEST_CASE("missing_resource") {
  ProjectB bad;
  bad.sprite("Cat").costume("normal").greenFlag(
      {stmt("looks_switchcostumeto")
           .withId("sw")
           .in("COSTUME", menu("looks_costume", "COSTUME", "hat"))});
  expectIssues(analyze(bad), "missing_resource", {{"sw"}});

  ProjectB clean;
  clean.sprite("Cat").costume("hat").greenFlag(
      {stmt("looks_switchcostumeto")
           .in("COSTUME", menu("looks_costume", "COSTUME", "hat"))});
  expectNone(analyze(clean), "missing_resource");

  // Declared in JSON but absent from the archive: also missing.
  ProjectB declaredOnly;
  declaredOnly.sprite("Cat").costume("hat", "nosuchfile.png").greenFlag(
      {stmt("looks_switchcostumeto")
           .withId("sw2")
           .in("COSTUME", menu("looks_costume", "COSTUME", "hat"))});
  zip::Writer writer;
  writer.add("project.json", declaredOnly.json());
  auto [program, inventory] = load_sb3(writer.finish());
  RunResult result = run_all(program, inventory, {});
  bool found = false;
  for (const Issue& issue : result.issues)
    if (issue.finderId == "missing_resource" &&
        issue.blockIds == std::vector<std::string>{"sw2"})
      found = true;
  CHECK(found);
}

TEST_CASE("missing_resource: sounds and backdrops") {
  ProjectB bad;
  bad.stage().costume("day");
  bad.sprite("Cat")
      .sound("meow")
      .greenFlag({stmt("sound_play")
                      .withId("plays")
                      .in("SOUND_MENU", menu("sound_sounds_menu", "SOUND_MENU", "bark")),
                  stmt("looks_switchbackdropto")
                      .withId("swb")
                      .in("BACKDROP", menu("looks_backdrops", "BACKDROP", "night"))});
  expectIssues(analyze(bad), "missing_resource", {{"plays"}, {"swb"}});

  ProjectB clean;
  clean.stage().costume("night");
  clean.sprite("Cat")
      .sound("bark")
      .greenFlag({stmt("sound_play")
                      .in("SOUND_MENU", menu("sound_sounds_menu", "SOUND_MENU", "bark")),
                  stmt("looks_switchbackdropto")
                      .in("BACKDROP", menu("looks_backdrops", "BACKDROP", "night")),
                  stmt("looks_switchbackdropto")
                      .in("BACKDROP", menu("looks_backdrops", "BACKDROP", "next backdrop"))});
  expectNone(analyze(clean), "missing_resource");
}

TEST_CASE("stuttering_movement") {
  ProjectB bad;
  bad.sprite("Cat").whenKey("right arrow",
                            {stmt("motion_movesteps").withId("mv").in("STEPS", num(10))});
  expectIssues(analyze(bad), "stuttering_movement", {{"mv"}});

  ProjectB clean;
  clean.sprite("Cat").whenKey(
      "right arrow", {stmt("motion_movesteps").in("STEPS", num(10)),
                      stmt("looks_nextcostume")});
  expectNone(analyze(clean), "stuttering_movement");
}
