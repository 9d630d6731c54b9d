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
// fetch/load -> parse -> analyze -> report, over one or many projects.
// Batch projects run on a worker pool; results keep input order. A failing
// project is reported and skipped, the batch continues.

#ifndef SB3LINT_PIPELINE_HPP
#define SB3LINT_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sb3lint/fetch.hpp"
#include "sb3lint/issue.hpp"

namespace sb3lint {

enum class RunMode { CHECK, STATS };

struct PipelineOptions {
  RunMode mode = RunMode::CHECK;
  FinderConfig finders;
  std::string locale = "en";
  std::optional<std::filesystem::path> output;  // .csv or .json
  bool annotate = false;
  bool failOnIssue = false;
  int jobs = 1;
  std::optional<std::filesystem::path> dotPath;  // CFG dump, single project
  std::filesystem::path cacheDir;
  FetchOptions fetch;
};

// Returns the process exit code: 0 success (issues found are not an
// error), 1 any project failed (or --fail-on-issue and something fired),
// 2 is reserved for usage errors which are thrown as UsageError.
int run_pipeline(const std::vector<ProjectSource>& sources,
                 const PipelineOptions& options, std::ostream& console,
                 std::ostream& errors);

}  // namespace sb3lint

#endif  // SB3LINT_PIPELINE_HPP
