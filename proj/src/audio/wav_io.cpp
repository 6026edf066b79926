// src/audio/wav_io.cpp

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

#include <algorithm>
#include <cmath>
#include <cstring>

#include "voiceforge/audio.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/io_util.hpp"

namespace vf {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

double decode_sample(ByteReader& r, const FmtChunk& fmt) {
  if (fmt.format == kFormatPcm) {
    std::int16_t s = static_cast<std::int16_t>(r.get_u16());
    return static_cast<double>(s) / 32768.0;
  }
  // IEEE float; clamp so the [-1, 1] invariant holds for out-of-range files.
  double v = static_cast<double>(r.get_f32());
  return std::clamp(v, -1.0, 1.0);
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::vector<std::uint8_t> bytes = read_file(path);
  ByteReader r(bytes.data(), bytes.size());

  std::string riff, wave;
  try {
    riff = r.get_magic();
    r.skip(4);  // RIFF chunk size; the actual chunk walk is bounds-checked
    wave = r.get_magic();
  } catch (const CorruptFileError&) {
    throw CorruptHeaderError(path + ": file too short for a RIFF header");
  }
  if (riff != "RIFF" || wave != "WAVE")
    throw CorruptHeaderError(path + ": not a RIFF/WAVE file");

  FmtChunk fmt;
  bool have_fmt = false;
  std::size_t data_offset = 0, data_size = 0;
  bool have_data = false;

  try {
    while (r.remaining() >= 8) {
      std::string id = r.get_magic();
      std::uint32_t size = r.get_u32();
      if (id == "fmt ") {
        if (size < 16) throw CorruptHeaderError(path + ": fmt chunk too small");
        ByteReader f(bytes.data() + r.offset(), size);
        fmt.format = f.get_u16();
        fmt.channels = f.get_u16();
        fmt.sample_rate = f.get_u32();
        f.skip(6);  // byte rate + block align
        fmt.bits_per_sample = f.get_u16();
        have_fmt = true;
      } else if (id == "data") {
        data_offset = r.offset();
        data_size = size;
        have_data = true;
      }
      r.skip(size + (size & 1));  // chunks are word-aligned
    }
  } catch (const CorruptFileError&) {
    throw CorruptHeaderError(path + ": truncated chunk");
  }

  if (!have_fmt || !have_data)
    throw CorruptHeaderError(path + ": missing fmt or data chunk");
  if (fmt.sample_rate == 0)
    throw CorruptHeaderError(path + ": zero sample rate");
  if (fmt.channels < 1 || fmt.channels > 2)
    throw UnsupportedEncodingError(path + ": " +
                                   std::to_string(fmt.channels) +
                                   " channels (need mono or stereo)");
  const bool pcm16 = fmt.format == kFormatPcm && fmt.bits_per_sample == 16;
  const bool float32 =
      fmt.format == kFormatIeeeFloat && fmt.bits_per_sample == 32;
  if (!pcm16 && !float32)
    throw UnsupportedEncodingError(
        path + ": format " + std::to_string(fmt.format) + " / " +
        std::to_string(fmt.bits_per_sample) +
        " bits (need PCM16 or float32)");

  const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
  const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
  const std::size_t num_frames = data_size / frame_bytes;

  Waveform w;
  w.sample_rate = static_cast<int>(fmt.sample_rate);
  w.samples.resize(num_frames);
  ByteReader d(bytes.data() + data_offset, num_frames * frame_bytes);
  for (std::size_t i = 0; i < num_frames; ++i) {
    double acc = 0.0;
    for (int c = 0; c < fmt.channels; ++c) acc += decode_sample(d, fmt);
    w.samples[i] = acc / fmt.channels;
  }
  return w;
}

WavWriteStats write_wav(const std::string& path, const Waveform& w) {
  if (w.samples.empty()) throw EmptyInputError("write_wav: empty waveform");
  if (w.sample_rate <= 0) throw ConfigError("write_wav: bad sample rate");

  WavWriteStats stats;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(w.samples.size() * 2);

  ByteWriter out;
  out.put_magic("RIFF");
  out.put_u32(36 + data_size);
  out.put_magic("WAVE");
  out.put_magic("fmt ");
  out.put_u32(16);
  out.put_u16(kFormatPcm);
  out.put_u16(1);  // mono
  out.put_u32(static_cast<std::uint32_t>(w.sample_rate));
  out.put_u32(static_cast<std::uint32_t>(w.sample_rate) * 2);  // byte rate
  out.put_u16(2);   // block align
  out.put_u16(16);  // bits per sample
  out.put_magic("data");
  out.put_u32(data_size);

  for (double x : w.samples) {
    if (std::abs(x) > 1.0) ++stats.clipped_samples;
    long q = std::lround(x * 32768.0);
    q = std::clamp(q, -32768L, 32767L);
    out.put_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  write_file(path, out.bytes());
  return stats;
}

}  // namespace vf
