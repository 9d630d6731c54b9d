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
// Minimal zip container support: enough to read .sb3 archives (stored and
// deflated entries) and to write them back with stored entries.

#ifndef SB3LINT_ZIP_HPP
#define SB3LINT_ZIP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sb3lint::zip {

struct Entry {
  std::string name;
  std::uint32_t crc32 = 0;
  std::uint64_t compressedSize = 0;
  std::uint64_t uncompressedSize = 0;
  std::uint16_t method = 0;  // 0 = stored, 8 = deflated
  std::uint64_t localHeaderOffset = 0;
};

class Archive {
 public:
  // Parses the central directory. Throws NotAnArchive on anything that is
  // not a readable zip file.
  explicit Archive(std::vector<std::uint8_t> bytes);

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  // Decompresses one entry. Throws NotAnArchive on corrupt data.
  std::vector<std::uint8_t> read(const Entry& entry) const;
  std::vector<std::uint8_t> read(std::string_view name) const;

 private:
  std::vector<std::uint8_t> bytes_;
  std::vector<Entry> entries_;
};

// Writes archives with stored (uncompressed) entries only.
class Writer {
 public:
  void add(std::string name, const std::vector<std::uint8_t>& data);
  void add(std::string name, std::string_view data);
  std::vector<std::uint8_t> finish();

 private:
  struct Pending {
    std::string name;
    std::uint32_t crc = 0;
    std::uint64_t offset = 0;
    std::uint64_t size = 0;
  };
  std::vector<std::uint8_t> out_;
  std::vector<Pending> central_;
};

}  // namespace sb3lint::zip

#endif  // SB3LINT_ZIP_HPP
