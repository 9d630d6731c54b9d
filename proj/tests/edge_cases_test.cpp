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
// Cross-cutting edge cases: message identity, uncommon hats, analysis
// scale.

#include <doctest.h>

#include <chrono>

#include "sb3lint/cfg.hpp"
#include "sb3lint/parser.hpp"
#include "sb3lint/scratchblocks.hpp"
#include "support/builder.hpp"
#include "support/findercheck.hpp"

using namespace sb3lint;
using namespace testsupport;

TEST_CASE("messages match by name when ids are out of sync") {
  // Hand-edited projects can carry different ids for the same message
  // name; the name is the fallback identity.
  ProjectB project;
  project.sprite("Cat").greenFlag(
      {stmt("event_broadcast").in("BROADCAST_INPUT", broadcastIn("go", ""))});
  project.sprite("Dog").whenReceive("go", "someOtherId", {stmt("looks_show")});
  Analysis a = analyze(project);
  expectNone(a, "message_never_received");
  expectNone(a, "message_never_sent");
}

TEST_CASE("loudness hat: event parsing, firing and rendering") {
  ProjectB project;
  project.sprite("Cat").hat(
      stmt("event_whengreaterthan")
          .field("WHENGREATERTHANMENU", "LOUDNESS")
          .in("VALUE", num(10)),
      {stmt("looks_show")});
  Program program = parse_project(project.json());
  const Script& script = program.sprites[0].scripts[0];
  CHECK(script.event.kind == EventKind::GreaterThan);
  CHECK(script.event.attribute == "LOUDNESS");

  // User-environment events always fire.
  for (const EventStatus& status : reachable_event_edges(program))
    if (status.event.kind == EventKind::GreaterThan) CHECK(status.fired);
  ControlFlowGraph cfg = build_cfg(program);
  CHECK(cfg.hasEdge(cfg.startNode(), cfg.entryForScript(&script), CfgEdgeKind::EVENT));

  std::string rendered = render_scratchblocks(script);
  CHECK(rendered ==
        "when [LOUDNESS v] > (10)\n"
        "show");
}

TEST_CASE("stage click hat maps to the clicked event") {
  ProjectB project;
  project.stage().whenClicked({stmt("looks_nextbackdrop")});
  Program program = parse_project(project.json());
  CHECK(program.stage.scripts[0].event.kind == EventKind::SpriteClicked);
}

TEST_CASE("boolean custom-block arguments render pointed") {
  ProjectB project;
  project.sprite("Cat")
      .proc("check %b", {{"flag", 'b'}},
            {stmt("control_if")
                 .in("CONDITION", blockIn(paramRef("flag", true)))
                 .body({stmt("looks_show")})})
      .greenFlag({call("check %b", {blockIn(rep("sensing_mousedown"))})});
  Program program = parse_project(project.json());
  std::string rendered = render_scratchblocks(program.sprites[0].scripts[0]);
  CHECK(rendered ==
        "when green flag clicked\n"
        "check <mouse down?> :: custom");
  std::string defRendered = render_scratchblocks(program.sprites[0].procedures[0]);
  CHECK(defRendered.rfind("define check <flag>", 0) == 0);
}

TEST_CASE("analysis scales to a large project") {
  ProjectB project;
  auto& sprite = project.sprite("Big");
  sprite.variable("v1", "score");
  for (int s = 0; s < 150; ++s) {
    std::vector<Blk> body;
    for (int i = 0; i < 10; ++i) {
      if (i % 3 == 0)
        body.push_back(stmt("control_if")
                           .in("CONDITION", blockIn(cmp("gt", varRef("score", "v1"), num(i))))
                           .body({stmt("motion_movesteps").in("STEPS", num(i))}));
      else
        body.push_back(stmt("looks_say").in("MESSAGE", txt("line " + std::to_string(s * 10 + i))));
    }
    sprite.greenFlag(std::move(body));
  }

  auto start = std::chrono::steady_clock::now();
  Analysis a = analyze(project);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  // ~2000 blocks with the full catalog, CFG and dataflow.
  CHECK(ms < 10000);
  CHECK(a.result.diagnostics.empty());
}
