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
// Project acquisition: local files, folders, remote ids and id lists.
// Remote fetches use the two-step flow of the public project service: a
// metadata request yields an access token, the content host serves the
// project JSON. Both endpoints are overridable for tests and for service
// drift.

#ifndef SB3LINT_FETCH_HPP
#define SB3LINT_FETCH_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sb3lint {

struct ProjectSource {
  enum class Kind { LOCAL_SB3, LOCAL_JSON, REMOTE_ID };
  Kind kind = Kind::LOCAL_JSON;
  std::filesystem::path path;  // local kinds
  std::int64_t id = 0;         // REMOTE_ID; always positive
  std::string resolvedName;
};

struct FetchOptions {
  std::string apiBase = "https://api.scratch.mit.edu";
  std::string projectHost = "https://projects.scratch.mit.edu";
  int maxRetries = 3;
  int retryDelayMs = 200;
  // Pause before each network request; polite default for batch mining.
  int politeDelayMs = 100;
  std::string userAgent = "sb3lint/0.1 (research linter)";
};

// All *.sb3 and *.json files directly inside `path`, sorted by file name.
// Throws NotADirectory.
std::vector<ProjectSource> scan_folder(const std::filesystem::path& path);

// One project id per line; blank lines and '#' comments are skipped.
// Throws MalformedId with the offending line number.
std::vector<ProjectSource> read_id_list(const std::filesystem::path& path);

// Downloads the project JSON into `<cacheDir>/<id>.json` unless it is
// already cached; returns the cached path. The cache write is atomic, and
// at most four downloads run concurrently process-wide.
// Throws NotFound for unshared/unknown ids and NetworkError after the
// retry budget is exhausted.
std::filesystem::path fetch_project(std::int64_t id,
                                    const std::filesystem::path& cacheDir,
                                    const FetchOptions& options = {});

}  // namespace sb3lint

#endif  // SB3LINT_FETCH_HPP
