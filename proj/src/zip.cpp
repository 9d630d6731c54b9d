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

#include "sb3lint/zip.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>

#include "sb3lint/errors.hpp"

namespace sb3lint::zip {

namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralHeaderSig = 0x02014b50;
constexpr std::uint32_t kEocdSig = 0x06054b50;

std::uint16_t readU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t readU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void putU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

void putU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::vector<std::uint8_t> inflateRaw(const std::uint8_t* data, std::uint64_t size,
                                     std::uint64_t expectedSize) {
  std::vector<std::uint8_t> out;
  out.resize(expectedSize);
  z_stream zs;
  std::memset(&zs, 0, sizeof(zs));
  // Negative window bits: raw deflate stream, no zlib header.
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK)
    throw NotAnArchive("zlib initialization failed");
  zs.next_in = const_cast<Bytef*>(data);
  zs.avail_in = static_cast<uInt>(size);
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = inflate(&zs, Z_FINISH);
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || zs.total_out != expectedSize)
    throw NotAnArchive("corrupt deflate stream in archive entry");
  return out;
}

}  // namespace

Archive::Archive(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < 22) throw NotAnArchive("input too small to be a zip archive");

  // EOCD: scan backwards over at most 64KB of trailing comment.
  std::size_t scanEnd = bytes_.size() - 22;
  std::size_t scanBegin = scanEnd > 65536 ? scanEnd - 65536 : 0;
  std::size_t eocd = std::string::npos;
  for (std::size_t i = scanEnd + 1; i-- > scanBegin;) {
    if (readU32(&bytes_[i]) == kEocdSig) {
      eocd = i;
      break;
    }
  }
  if (eocd == std::string::npos)
    throw NotAnArchive("no end-of-central-directory record found");

  std::uint16_t entryCount = readU16(&bytes_[eocd + 10]);
  std::uint32_t cdOffset = readU32(&bytes_[eocd + 16]);
  if (cdOffset >= bytes_.size()) throw NotAnArchive("central directory offset out of range");

  std::size_t pos = cdOffset;
  for (std::uint16_t i = 0; i < entryCount; ++i) {
    if (pos + 46 > bytes_.size() || readU32(&bytes_[pos]) != kCentralHeaderSig)
      throw NotAnArchive("truncated central directory");
    Entry e;
    e.method = readU16(&bytes_[pos + 10]);
    e.crc32 = readU32(&bytes_[pos + 16]);
    e.compressedSize = readU32(&bytes_[pos + 20]);
    e.uncompressedSize = readU32(&bytes_[pos + 24]);
    std::uint16_t nameLen = readU16(&bytes_[pos + 28]);
    std::uint16_t extraLen = readU16(&bytes_[pos + 30]);
    std::uint16_t commentLen = readU16(&bytes_[pos + 32]);
    e.localHeaderOffset = readU32(&bytes_[pos + 42]);
    if (pos + 46 + nameLen > bytes_.size())
      throw NotAnArchive("truncated central directory entry name");
    e.name.assign(reinterpret_cast<const char*>(&bytes_[pos + 46]), nameLen);
    entries_.push_back(std::move(e));
    pos += 46 + nameLen + extraLen + commentLen;
  }
}

const Entry* Archive::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::uint8_t> Archive::read(const Entry& entry) const {
  std::size_t pos = entry.localHeaderOffset;
  if (pos + 30 > bytes_.size() || readU32(&bytes_[pos]) != kLocalHeaderSig)
    throw NotAnArchive("bad local header for entry " + entry.name);
  std::uint16_t nameLen = readU16(&bytes_[pos + 26]);
  std::uint16_t extraLen = readU16(&bytes_[pos + 28]);
  std::size_t dataPos = pos + 30 + nameLen + extraLen;
  if (dataPos + entry.compressedSize > bytes_.size())
    throw NotAnArchive("entry data out of range: " + entry.name);

  std::vector<std::uint8_t> data;
  if (entry.method == 0) {
    data.assign(bytes_.begin() + dataPos,
                bytes_.begin() + dataPos + entry.compressedSize);
  } else if (entry.method == 8) {
    data = inflateRaw(&bytes_[dataPos], entry.compressedSize,
                      entry.uncompressedSize);
  } else {
    throw NotAnArchive("unsupported compression method for " + entry.name);
  }

  std::uint32_t crc =
      static_cast<std::uint32_t>(::crc32(0L, data.data(), static_cast<uInt>(data.size())));
  if (crc != entry.crc32)
    throw NotAnArchive("crc mismatch for entry " + entry.name);
  return data;
}

std::vector<std::uint8_t> Archive::read(std::string_view name) const {
  const Entry* e = find(name);
  if (!e) throw NoProjectJson("archive has no entry named " + std::string(name));
  return read(*e);
}

void Writer::add(std::string name, const std::vector<std::uint8_t>& data) {
  Pending p;
  p.name = std::move(name);
  p.offset = out_.size();
  p.size = data.size();
  p.crc = static_cast<std::uint32_t>(
      ::crc32(0L, data.data(), static_cast<uInt>(data.size())));

  putU32(out_, kLocalHeaderSig);
  putU16(out_, 20);  // version needed
  putU16(out_, 0);   // flags
  putU16(out_, 0);   // method: stored
  putU16(out_, 0);   // mod time
  putU16(out_, 0x21);  // mod date (1980-01-01)
  putU32(out_, p.crc);
  putU32(out_, static_cast<std::uint32_t>(p.size));
  putU32(out_, static_cast<std::uint32_t>(p.size));
  putU16(out_, static_cast<std::uint16_t>(p.name.size()));
  putU16(out_, 0);  // extra
  out_.insert(out_.end(), p.name.begin(), p.name.end());
  out_.insert(out_.end(), data.begin(), data.end());
  central_.push_back(std::move(p));
}

void Writer::add(std::string name, std::string_view data) {
  std::vector<std::uint8_t> bytes(data.begin(), data.end());
  add(std::move(name), bytes);
}

std::vector<std::uint8_t> Writer::finish() {
  std::uint64_t cdStart = out_.size();
  for (const auto& p : central_) {
    putU32(out_, kCentralHeaderSig);
    putU16(out_, 20);  // version made by
    putU16(out_, 20);  // version needed
    putU16(out_, 0);   // flags
    putU16(out_, 0);   // method
    putU16(out_, 0);   // time
    putU16(out_, 0x21);  // date
    putU32(out_, p.crc);
    putU32(out_, static_cast<std::uint32_t>(p.size));
    putU32(out_, static_cast<std::uint32_t>(p.size));
    putU16(out_, static_cast<std::uint16_t>(p.name.size()));
    putU16(out_, 0);  // extra
    putU16(out_, 0);  // comment
    putU16(out_, 0);  // disk
    putU16(out_, 0);  // internal attrs
    putU32(out_, 0);  // external attrs
    putU32(out_, static_cast<std::uint32_t>(p.offset));
    out_.insert(out_.end(), p.name.begin(), p.name.end());
  }
  std::uint64_t cdSize = out_.size() - cdStart;
  putU32(out_, kEocdSig);
  putU16(out_, 0);  // disk
  putU16(out_, 0);  // cd disk
  putU16(out_, static_cast<std::uint16_t>(central_.size()));
  putU16(out_, static_cast<std::uint16_t>(central_.size()));
  putU32(out_, static_cast<std::uint32_t>(cdSize));
  putU32(out_, static_cast<std::uint32_t>(cdStart));
  putU16(out_, 0);  // comment length
  return std::move(out_);
}

}  // namespace sb3lint::zip
