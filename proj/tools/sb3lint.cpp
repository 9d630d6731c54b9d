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
// Command line front end. Exit codes: 0 success (found issues are not an
// error unless --fail-on-issue), 1 tool error, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "sb3lint/errors.hpp"
#include "sb3lint/finders.hpp"
#include "sb3lint/pipeline.hpp"

namespace {

std::string finderListing() {
  std::ostringstream out;
  out << "\nFinders (" << sb3lint::finderRegistry().size() << "):\n";
  for (const sb3lint::Finder* finder : sb3lint::finderRegistry())
    out << "  " << finder->id() << "  [" << sb3lint::categoryName(finder->category())
        << "]\n";
  return out.str();
}

std::filesystem::path defaultCacheDir() {
  if (const char* dir = std::getenv("SB3LINT_CACHE_DIR")) return dir;
  return std::filesystem::temp_directory_path() / "sb3lint-cache";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sb3lint;

  CLI::App app{"sb3lint - a static analysis linter for Scratch 3 projects"};
  app.footer(finderListing());

  bool checkMode = false, statsMode = false;
  std::string path, idList, output, lang = "en", findersCsv, dotPath;
  std::int64_t projectId = 0;
  bool ignoreLoose = false, annotate = false, failOnIssue = false;
  int jobs = 1, longScriptThreshold = 12;

  app.add_flag("--check", checkMode, "Apply the issue finders");
  app.add_flag("--stats", statsMode, "Produce code metrics");
  app.add_option("--path", path, "Project file (.sb3 or .json) or a folder of projects");
  app.add_option("--projectid", projectId, "Shared project id to download and analyze");
  app.add_option("--idlist", idList, "File with one project id per line");
  app.add_option("--output", output, "Report file; format deduced from .csv/.json");
  app.add_option("--lang", lang, "Hint language (en, de)");
  app.add_option("--finders", findersCsv, "Comma-separated finder ids to enable");
  app.add_flag("--ignore-loose", ignoreLoose, "Hide scripts without a hat block");
  app.add_flag("--annotate", annotate, "Also write an annotated project copy");
  app.add_flag("--fail-on-issue", failOnIssue, "Exit 1 when any issue is found");
  app.add_option("--jobs", jobs, "Worker threads for batch analysis");
  app.add_option("--long-script-threshold", longScriptThreshold,
                 "Block count above which a script is long (default 12)");
  app.add_option("--dot", dotPath, "Write the control-flow graph as DOT (one project)");

  try {
    app.parse(argc, argv);

    if (checkMode == statsMode)
      throw UsageError("exactly one of --check / --stats is required");
    int inputCount = (path.empty() ? 0 : 1) + (idList.empty() ? 0 : 1) +
                     (projectId != 0 ? 1 : 0);
    if (inputCount != 1)
      throw UsageError("exactly one of --path / --projectid / --idlist is required");

    PipelineOptions options;
    options.mode = checkMode ? RunMode::CHECK : RunMode::STATS;
    options.locale = lang;
    options.finders.ignoreLooseBlocks = ignoreLoose;
    options.finders.longScriptThreshold = longScriptThreshold;
    if (!findersCsv.empty()) {
      std::stringstream ss(findersCsv);
      std::string id;
      while (std::getline(ss, id, ','))
        if (!id.empty()) options.finders.enabledFinderIds.insert(id);
    }
    if (!output.empty()) options.output = std::filesystem::path(output);
    options.annotate = annotate;
    options.failOnIssue = failOnIssue;
    options.jobs = jobs;
    if (!dotPath.empty()) options.dotPath = std::filesystem::path(dotPath);
    options.cacheDir = defaultCacheDir();
    if (const char* base = std::getenv("SB3LINT_API_BASE"))
      options.fetch.apiBase = base;
    if (const char* host = std::getenv("SB3LINT_PROJECT_HOST"))
      options.fetch.projectHost = host;

    std::vector<ProjectSource> sources;
    if (!path.empty()) {
      std::filesystem::path p(path);
      if (std::filesystem::is_directory(p)) {
        sources = scan_folder(p);
      } else if (std::filesystem::exists(p)) {
        ProjectSource source;
        source.kind = p.extension() == ".sb3" ? ProjectSource::Kind::LOCAL_SB3
                                              : ProjectSource::Kind::LOCAL_JSON;
        source.path = p;
        source.resolvedName = p.stem().string();
        sources.push_back(std::move(source));
      } else {
        throw UsageError("no such file or directory: " + path);
      }
    } else if (projectId != 0) {
      if (projectId < 0) throw UsageError("--projectid must be positive");
      ProjectSource source;
      source.kind = ProjectSource::Kind::REMOTE_ID;
      source.id = projectId;
      source.resolvedName = std::to_string(projectId);
      sources.push_back(std::move(source));
    } else {
      sources = read_id_list(idList);
    }

    return run_pipeline(sources, options, std::cout, std::cerr);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedId& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
