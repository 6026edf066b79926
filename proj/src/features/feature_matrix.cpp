// src/features/feature_matrix.cpp

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

#include "voiceforge/feature_matrix.hpp"

#include "voiceforge/error.hpp"
#include "voiceforge/io_util.hpp"

namespace vf {

namespace {
constexpr std::uint32_t kFmatVersion = 1;
}

void FeatureMatrix::truncate(std::size_t new_frames) {
  if (new_frames >= frames) return;
  frames = new_frames;
  data.resize(frames * dims);
}

void save_feature_matrix(const std::string& path, const FeatureMatrix& m) {
  ByteWriter out;
  out.put_magic("FMAT");
  out.put_u32(kFmatVersion);
  out.put_u32(static_cast<std::uint32_t>(m.frames));
  out.put_u32(static_cast<std::uint32_t>(m.dims));
  out.put_f64(m.frame_shift);
  for (double v : m.data) out.put_f32(static_cast<float>(v));
  write_file(path, out.bytes());
}

FeatureMatrix load_feature_matrix(const std::string& path) {
  std::vector<std::uint8_t> bytes = read_file(path);
  ByteReader r(bytes.data(), bytes.size());

  std::string magic;
  try {
    magic = r.get_magic();
  } catch (const CorruptFileError&) {
    throw CorruptFileError(path + ": too short for an FMAT header");
  }
  if (magic != "FMAT")
    throw VersionMismatchError(path + ": expected magic FMAT, found '" +
                               magic + "'");
  std::uint32_t version = r.get_u32();
  if (version != kFmatVersion)
    throw VersionMismatchError(path + ": unsupported FMAT version " +
                               std::to_string(version));

  FeatureMatrix m;
  std::uint32_t frames = r.get_u32();
  std::uint32_t dims = r.get_u32();
  m.frames = frames;
  m.dims = dims;
  m.frame_shift = r.get_f64();

  const std::size_t count = static_cast<std::size_t>(frames) * dims;
  if (r.remaining() != count * 4)
    throw CorruptFileError(path + ": payload size mismatch (" +
                           std::to_string(r.remaining()) + " bytes for " +
                           std::to_string(count) + " values)");
  m.data.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    m.data[i] = static_cast<double>(r.get_f32());
  return m;
}

}  // namespace vf
