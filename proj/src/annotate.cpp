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
// Annotated export: one editor comment per issue, attached to the issue's
// first block inside the owning target. The rest of the document passes
// through untouched, so re-parsing yields the same analysis.

#include <json.hpp>

#include "sb3lint/errors.hpp"
#include "sb3lint/report.hpp"
#include "sb3lint/zip.hpp"

namespace sb3lint {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kCommentOffsetX = 280;
constexpr double kCommentWidth = 300;
constexpr double kCommentHeight = 200;

ojson* findTarget(ojson& doc, const std::string& actorName) {
  if (!doc.contains("targets") || !doc["targets"].is_array()) return nullptr;
  for (auto& target : doc["targets"])
    if (target.is_object() && target.value("name", std::string()) == actorName)
      return &target;
  return nullptr;
}

std::string freshCommentId(const ojson& comments, int& counter) {
  for (;;) {
    std::string id = "sb3lint-issue-" + std::to_string(++counter);
    if (!comments.contains(id)) return id;
  }
}

}  // namespace

std::string annotate_project(std::string_view rawProjectJson,
                             const std::vector<Issue>& issues,
                             const std::string& locale,
                             const HintCatalog& catalog) {
  ojson doc = ojson::parse(rawProjectJson, nullptr, false);
  if (doc.is_discarded())
    throw MalformedProject("annotate: input is not valid JSON");

  int counter = 0;
  for (const Issue& issue : issues) {
    ojson* target = findTarget(doc, issue.actorName);
    if (target == nullptr)
      throw BlockNotFound("annotate: no target named " + issue.actorName);

    double x = 0, y = 0;
    ojson blockId;  // null for actor-level issues: a workspace comment
    if (!issue.blockIds.empty()) {
      const std::string& block = issue.blockIds.front();
      if (!(*target).contains("blocks") || !(*target)["blocks"].is_object() ||
          !(*target)["blocks"].contains(block))
        throw BlockNotFound("annotate: block " + block + " not found in " +
                            issue.actorName);
      blockId = block;
      const ojson& blockJson = (*target)["blocks"][block];
      if (blockJson.is_object()) {
        x = blockJson.value("x", 0.0);
        y = blockJson.value("y", 0.0);
      }
    }

    if (!(*target).contains("comments") || !(*target)["comments"].is_object())
      (*target)["comments"] = ojson::object();
    ojson& comments = (*target)["comments"];

    ojson comment;
    comment["blockId"] = blockId;
    comment["x"] = x + kCommentOffsetX;
    comment["y"] = y;
    comment["width"] = kCommentWidth;
    comment["height"] = kCommentHeight;
    comment["minimized"] = false;
    comment["text"] = "[" + issue.finderId + "] " + catalog.render(issue, locale);
    comments[freshCommentId(comments, counter)] = std::move(comment);
  }
  return doc.dump();
}

std::vector<std::uint8_t> annotate_sb3(const std::vector<std::uint8_t>& archiveBytes,
                                       const std::vector<Issue>& issues,
                                       const std::string& locale,
                                       const HintCatalog& catalog) {
  zip::Archive archive(archiveBytes);
  if (!archive.contains("project.json"))
    throw NoProjectJson("annotate: archive contains no project.json");

  zip::Writer writer;
  for (const zip::Entry& entry : archive.entries()) {
    std::vector<std::uint8_t> data = archive.read(entry);
    if (entry.name == "project.json") {
      std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
      std::string annotated = annotate_project(text, issues, locale, catalog);
      writer.add(entry.name, annotated);
    } else {
      writer.add(entry.name, data);
    }
  }
  return writer.finish();
}

}  // namespace sb3lint
