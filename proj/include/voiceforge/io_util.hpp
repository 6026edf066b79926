// include/voiceforge/io_util.hpp

// Copyright 2026  The VoiceForge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOICEFORGE_IO_UTIL_HPP_
#define VOICEFORGE_IO_UTIL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vf {

// Every on-disk format in this toolkit is little-endian regardless of host.
// ByteWriter builds the file image in memory; ByteReader parses one with
// bounds checking and throws CorruptFileError when a read runs past the end.

class ByteWriter {
 public:
  void put_bytes(const void* p, std::size_t n);
  void put_u16(std::uint16_t v);
  void put_u32(std::uint32_t v);
  void put_f32(float v);
  void put_f64(double v);
  void put_magic(const char magic[4]);

  const std::vector<std::uint8_t>& bytes() const { return buf_; }
  std::size_t size() const { return buf_.size(); }

 private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  ByteReader(const std::uint8_t* data, std::size_t size)
      : data_(data), size_(size) {}
  explicit ByteReader(std::span<const std::uint8_t> bytes)
      : data_(bytes.data()), size_(bytes.size()) {}

  void get_bytes(void* out, std::size_t n);
  std::uint16_t get_u16();
  std::uint32_t get_u32();
  float get_f32();
  double get_f64();
  // Reads 4 bytes and returns them as a printable string.
  std::string get_magic();

  std::size_t offset() const { return off_; }
  std::size_t remaining() const { return size_ - off_; }
  void skip(std::size_t n);

 private:
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t off_ = 0;
};

// Whole-file helpers. read_file throws FileNotFoundError when the path does
// not open; write_file throws IoError on failure.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

// CRC-32 (IEEE 802.3 polynomial, reflected).
std::uint32_t crc32(std::span<const std::uint8_t> bytes);

}  // namespace vf

#endif  // VOICEFORGE_IO_UTIL_HPP_
