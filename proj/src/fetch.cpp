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

#include "sb3lint/fetch.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <semaphore>
#include <thread>

#include "sb3lint/errors.hpp"

namespace sb3lint {

namespace {

// Polite client: never more than four downloads in flight.
std::counting_semaphore<4>& downloadSlots() {
  static std::counting_semaphore<4> slots(4);
  return slots;
}

struct SlotGuard {
  SlotGuard() { downloadSlots().acquire(); }
  ~SlotGuard() { downloadSlots().release(); }
};

std::string httpGet(const std::string& base, const std::string& path,
                    const FetchOptions& options, bool& notFound) {
  notFound = false;
  std::string lastError;
  for (int attempt = 0; attempt <= options.maxRetries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(options.retryDelayMs << (attempt - 1)));
    }
    if (options.politeDelayMs > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(options.politeDelayMs));

    httplib::Client client(base);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    httplib::Headers headers = {{"User-Agent", options.userAgent}};
    auto res = client.Get(path, headers);
    if (!res) {
      lastError = "connection to " + base + " failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 404) {
      notFound = true;
      return "";
    }
    if (res->status >= 500) {
      lastError = base + path + " returned status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw NetworkError(base + path + " returned status " +
                         std::to_string(res->status));
    }
    return res->body;
  }
  throw NetworkError(lastError.empty() ? "request failed" : lastError);
}

}  // namespace

std::vector<ProjectSource> scan_folder(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path, ec))
    throw NotADirectory(path.string() + " is not a directory");

  std::vector<ProjectSource> sources;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    ProjectSource source;
    if (ext == ".sb3")
      source.kind = ProjectSource::Kind::LOCAL_SB3;
    else if (ext == ".json")
      source.kind = ProjectSource::Kind::LOCAL_JSON;
    else
      continue;
    source.path = entry.path();
    source.resolvedName = entry.path().stem().string();
    sources.push_back(std::move(source));
  }
  std::sort(sources.begin(), sources.end(),
            [](const ProjectSource& a, const ProjectSource& b) {
              return a.path.filename().string() < b.path.filename().string();
            });
  return sources;
}

std::vector<ProjectSource> read_id_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotADirectory("cannot open id list " + path.string());

  std::vector<ProjectSource> sources;
  std::string line;
  int lineNumber = 0;
  while (std::getline(in, line)) {
    ++lineNumber;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::int64_t id = 0;
    for (char c : trimmed) {
      if (c < '0' || c > '9')
        throw MalformedId("id list line " + std::to_string(lineNumber) +
                              ": not a project id: " + trimmed,
                          lineNumber);
      id = id * 10 + (c - '0');
    }
    if (id <= 0)
      throw MalformedId("id list line " + std::to_string(lineNumber) +
                            ": ids must be positive",
                        lineNumber);
    ProjectSource source;
    source.kind = ProjectSource::Kind::REMOTE_ID;
    source.id = id;
    source.resolvedName = trimmed;
    sources.push_back(std::move(source));
  }
  return sources;
}

std::filesystem::path fetch_project(std::int64_t id,
                                    const std::filesystem::path& cacheDir,
                                    const FetchOptions& options) {
  if (id <= 0) throw NotFound("project ids must be positive");

  std::filesystem::path cached = cacheDir / (std::to_string(id) + ".json");
  if (std::filesystem::exists(cached)) return cached;
  std::filesystem::create_directories(cacheDir);

  SlotGuard slot;

  bool notFound = false;
  std::string metadata =
      httpGet(options.apiBase, "/projects/" + std::to_string(id), options, notFound);
  if (notFound)
    throw NotFound("project " + std::to_string(id) + " is unknown or unshared");

  auto doc = nlohmann::json::parse(metadata, nullptr, false);
  std::string token;
  if (doc.is_object() && doc.contains("project_token") &&
      doc["project_token"].is_string())
    token = doc["project_token"].get<std::string>();

  std::string path = "/" + std::to_string(id);
  if (!token.empty()) path += "?token=" + token;
  std::string body = httpGet(options.projectHost, path, options, notFound);
  if (notFound)
    throw NotFound("project content for " + std::to_string(id) + " not found");

  // Tolerate concurrent runs: write to a unique temp name, then rename.
  std::filesystem::path tmp =
      cacheDir / (std::to_string(id) + ".json.tmp" +
                  std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw NetworkError("cannot write cache file " + tmp.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, cached, ec);
  if (ec && !std::filesystem::exists(cached))
    throw NetworkError("cannot move cache file into place: " + ec.message());
  return cached;
}

}  // namespace sb3lint
