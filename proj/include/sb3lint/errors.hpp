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

#ifndef SB3LINT_ERRORS_HPP
#define SB3LINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sb3lint {

// Base class for every error raised by the tool itself. Anything escaping
// a module that is not a ToolError is a defect.
class ToolError : public std::runtime_error {
 public:
  explicit ToolError(const std::string& msg) : std::runtime_error(msg) {}
};

// project.json is structurally unusable: missing `targets`, no stage
// target, or a cyclic `next` chain.
class MalformedProject : public ToolError {
 public:
  explicit MalformedProject(const std::string& msg) : ToolError(msg) {}
};

// Input bytes are not a zip archive.
class NotAnArchive : public ToolError {
 public:
  explicit NotAnArchive(const std::string& msg) : ToolError(msg) {}
};

// Zip archive has no project.json entry.
class NoProjectJson : public ToolError {
 public:
  explicit NoProjectJson(const std::string& msg) : ToolError(msg) {}
};

class NotADirectory : public ToolError {
 public:
  explicit NotADirectory(const std::string& msg) : ToolError(msg) {}
};

// An id-list line that is not a positive integer.
class MalformedId : public ToolError {
 public:
  MalformedId(const std::string& msg, int line) : ToolError(msg), line(line) {}
  int line;
};

// Remote project does not exist or is not shared.
class NotFound : public ToolError {
 public:
  explicit NotFound(const std::string& msg) : ToolError(msg) {}
};

class NetworkError : public ToolError {
 public:
  explicit NetworkError(const std::string& msg) : ToolError(msg) {}
};

// The fallback (English) hint catalog lacks a requested key.
class MissingHintKey : public ToolError {
 public:
  explicit MissingHintKey(const std::string& msg) : ToolError(msg) {}
};

// An issue references a block id absent from the raw project JSON.
class BlockNotFound : public ToolError {
 public:
  explicit BlockNotFound(const std::string& msg) : ToolError(msg) {}
};

// Bad command line or bad finder selection; maps to exit code 2.
class UsageError : public ToolError {
 public:
  explicit UsageError(const std::string& msg) : ToolError(msg) {}
};

}  // namespace sb3lint

#endif  // SB3LINT_ERRORS_HPP
