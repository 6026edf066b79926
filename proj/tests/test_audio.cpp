// tests/test_audio.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "test_util.hpp"
#include "voiceforge/audio.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/io_util.hpp"

using namespace vf;
using vftest::TempDir;

namespace {

// Hand-assembled WAV images so the reader is tested against raw bytes, not
// against our own writer.
std::vector<std::uint8_t> make_wav_bytes(std::uint16_t format,
                                         std::uint16_t channels,
                                         std::uint32_t rate,
                                         std::uint16_t bits,
                                         const std::vector<std::uint8_t>& data) {
  ByteWriter w;
  w.put_magic("RIFF");
  w.put_u32(36 + static_cast<std::uint32_t>(data.size()));
  w.put_magic("WAVE");
  w.put_magic("fmt ");
  w.put_u32(16);
  w.put_u16(format);
  w.put_u16(channels);
  w.put_u32(rate);
  w.put_u32(rate * channels * bits / 8);
  w.put_u16(static_cast<std::uint16_t>(channels * bits / 8));
  w.put_u16(bits);
  w.put_magic("data");
  w.put_u32(static_cast<std::uint32_t>(data.size()));
  w.put_bytes(data.data(), data.size());
  return w.bytes();
}

std::vector<std::uint8_t> int16_payload(const std::vector<std::int16_t>& xs) {
  ByteWriter w;
  for (std::int16_t x : xs) w.put_u16(static_cast<std::uint16_t>(x));
  return w.bytes();
}

}  // namespace

TEST_CASE("read_wav: 1 s of 16 kHz silence is 16000 zeros") {
  TempDir dir("vf_audio");
  std::vector<std::int16_t> raw(16000, 0);
  write_file(dir.file("z.wav"),
             make_wav_bytes(1, 1, 16000, 16, int16_payload(raw)));
  Waveform w = read_wav(dir.file("z.wav"));
  CHECK(w.sample_rate == 16000);
  REQUIRE(w.samples.size() == 16000);
  for (double s : w.samples) CHECK(s == 0.0);
}

TEST_CASE("read_wav: int16 16384 scales to exactly 0.5") {
  // Oracle: 16384 / 32768 = 0.5.
  TempDir dir("vf_audio");
  write_file(dir.file("h.wav"),
             make_wav_bytes(1, 1, 16000, 16, int16_payload({16384, -16384})));
  Waveform w = read_wav(dir.file("h.wav"));
  REQUIRE(w.samples.size() == 2);
  CHECK(w.samples[0] == 0.5);
  CHECK(w.samples[1] == -0.5);
}

TEST_CASE("read_wav: symmetric stereo downmixes to zero") {
  TempDir dir("vf_audio");
  std::vector<std::int16_t> raw;
  for (int i = 0; i < 100; ++i) {
    raw.push_back(16384);   // left  0.5
    raw.push_back(-16384);  // right -0.5
  }
  write_file(dir.file("s.wav"),
             make_wav_bytes(1, 2, 16000, 16, int16_payload(raw)));
  Waveform w = read_wav(dir.file("s.wav"));
  REQUIRE(w.samples.size() == 100);
  for (double s : w.samples) CHECK(s == 0.0);
}

TEST_CASE("read_wav: stereo downmix is linear") {
  TempDir dir("vf_audio");
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(-20000, 20000);
  std::vector<std::int16_t> a(64), b(64), summed(128);
  std::vector<std::int16_t> stereo_a(128), stereo_b(128);
  for (int i = 0; i < 64; ++i) {
    a[i] = static_cast<std::int16_t>(dist(rng) / 2);
    b[i] = static_cast<std::int16_t>(dist(rng) / 2);
    stereo_a[2 * i] = a[i];
    stereo_a[2 * i + 1] = b[i];
    stereo_b[2 * i] = b[i];
    stereo_b[2 * i + 1] = a[i];
    summed[2 * i] = static_cast<std::int16_t>(a[i] + b[i]);
    summed[2 * i + 1] = static_cast<std::int16_t>(a[i] + b[i]);
  }
  write_file(dir.file("a.wav"),
             make_wav_bytes(1, 2, 16000, 16, int16_payload(stereo_a)));
  write_file(dir.file("b.wav"),
             make_wav_bytes(1, 2, 16000, 16, int16_payload(stereo_b)));
  write_file(dir.file("ab.wav"),
             make_wav_bytes(1, 2, 16000, 16, int16_payload(summed)));
  Waveform wa = read_wav(dir.file("a.wav"));
  Waveform wb = read_wav(dir.file("b.wav"));
  Waveform wab = read_wav(dir.file("ab.wav"));
  for (std::size_t i = 0; i < wa.samples.size(); ++i)
    CHECK(wab.samples[i] == doctest::Approx(wa.samples[i] + wb.samples[i])
                                .epsilon(1e-12));
}

TEST_CASE("read_wav: float32 payload is read as-is") {
  TempDir dir("vf_audio");
  ByteWriter payload;
  payload.put_f32(0.25f);
  payload.put_f32(-0.75f);
  write_file(dir.file("f.wav"),
             make_wav_bytes(3, 1, 44100, 32, payload.bytes()));
  Waveform w = read_wav(dir.file("f.wav"));
  CHECK(w.sample_rate == 44100);
  REQUIRE(w.samples.size() == 2);
  CHECK(w.samples[0] == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(w.samples[1] == doctest::Approx(-0.75).epsilon(1e-9));
}

TEST_CASE("read_wav: error paths") {
  TempDir dir("vf_audio");
  CHECK_THROWS_AS(read_wav(dir.file("missing.wav")), FileNotFoundError);

  // Unsupported: 8-bit PCM.
  write_file(dir.file("u8.wav"), make_wav_bytes(1, 1, 16000, 8, {0, 0}));
  CHECK_THROWS_AS(read_wav(dir.file("u8.wav")), UnsupportedEncodingError);

  // Unsupported: ADPCM format code.
  write_file(dir.file("adpcm.wav"),
             make_wav_bytes(2, 1, 16000, 16, int16_payload({0})));
  CHECK_THROWS_AS(read_wav(dir.file("adpcm.wav")), UnsupportedEncodingError);

  // Corrupt: not RIFF at all.
  write_file(dir.file("junk.wav"),
             std::vector<std::uint8_t>{'J', 'U', 'N', 'K', 0, 0, 0, 0, 'X',
                                       'X', 'X', 'X'});
  CHECK_THROWS_AS(read_wav(dir.file("junk.wav")), CorruptHeaderError);

  // Corrupt: too short for a header.
  write_file(dir.file("tiny.wav"), std::vector<std::uint8_t>{'R', 'I'});
  CHECK_THROWS_AS(read_wav(dir.file("tiny.wav")), CorruptHeaderError);
}

TEST_CASE("write_wav: sine round-trip stays within one quantization step") {
  TempDir dir("vf_audio");
  Waveform w = vftest::sine(440.0, 0.25, 16000, 0.8);
  write_wav(dir.file("s.wav"), w);
  Waveform back = read_wav(dir.file("s.wav"));
  REQUIRE(back.samples.size() == w.samples.size());
  double max_err = 0.0;
  for (std::size_t i = 0; i < w.samples.size(); ++i)
    max_err = std::max(max_err, std::abs(back.samples[i] - w.samples[i]));
  CHECK(max_err <= 1.0 / 32768.0);
}

TEST_CASE("write_wav: empty waveform is an error") {
  TempDir dir("vf_audio");
  Waveform w;
  w.sample_rate = 16000;
  CHECK_THROWS_AS(write_wav(dir.file("e.wav"), w), EmptyInputError);
}

TEST_CASE("write_wav: overdriven sample saturates and is counted") {
  TempDir dir("vf_audio");
  Waveform w;
  w.sample_rate = 16000;
  w.samples = {1.5, 0.0, -2.0};
  WavWriteStats stats = write_wav(dir.file("c.wav"), w);
  CHECK(stats.clipped_samples == 2);
  Waveform back = read_wav(dir.file("c.wav"));
  CHECK(back.samples[0] == doctest::Approx(32767.0 / 32768.0));
  CHECK(back.samples[1] == 0.0);
  CHECK(back.samples[2] == -1.0);
}

TEST_CASE("write_wav: emits the canonical 44-byte header") {
  TempDir dir("vf_audio");
  Waveform w;
  w.sample_rate = 16000;
  w.samples.assign(10, 0.0);
  write_wav(dir.file("h.wav"), w);
  auto bytes = read_file(dir.file("h.wav"));
  REQUIRE(bytes.size() == 44 + 20);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "RIFF");
  CHECK(std::string(bytes.begin() + 8, bytes.begin() + 12) == "WAVE");
  CHECK(std::string(bytes.begin() + 36, bytes.begin() + 40) == "data");
}

TEST_CASE("resample: equal rates return identical samples") {
  Waveform w = vftest::white_noise(0.1, 16000, 1);
  Waveform r = resample(w, 16000);
  CHECK(r.samples == w.samples);
}

TEST_CASE("resample: 1 s of 48 kHz becomes exactly 16000 samples") {
  Waveform w = vftest::sine(440.0, 1.0, 48000, 0.5);
  Waveform r = resample(w, 16000);
  CHECK(r.sample_rate == 16000);
  CHECK(r.samples.size() == 16000);
}

TEST_CASE("resample: 100 Hz tone survives 48k->16k with aliasing below -60 dB") {
  // Oracle: DFT of the output; the tone must stay in its bin and everything
  // outside the mainlobe must sit at least 60 dB down.
  Waveform w = vftest::sine(100.0, 1.0, 48000, 0.5);
  Waveform r = resample(w, 16000);
  REQUIRE(r.samples.size() == 16000);

  // Hann-window the analysis so measurement leakage does not mask aliasing.
  std::vector<double> windowed(r.samples.size());
  for (std::size_t i = 0; i < windowed.size(); ++i) {
    const double win =
        0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i /
                              (windowed.size() - 1)));
    windowed[i] = r.samples[i] * win;
  }
  auto spec = vftest::naive_dft(windowed);

  // 1 Hz per bin at 16000 samples / 16 kHz.
  std::size_t peak_bin = 0;
  double peak = 0.0;
  for (std::size_t k = 0; k < spec.size() / 2; ++k) {
    if (std::abs(spec[k]) > peak) {
      peak = std::abs(spec[k]);
      peak_bin = k;
    }
  }
  CHECK(peak_bin == 100);

  double worst_alias = 0.0;
  for (std::size_t k = 0; k < spec.size() / 2; ++k) {
    if (k + 8 >= 100 && k <= 108) continue;  // skip tone mainlobe region
    worst_alias = std::max(worst_alias, std::abs(spec[k]));
  }
  CHECK(20.0 * std::log10(worst_alias / peak) < -60.0);
}

TEST_CASE("resample: duration preserved within one sample period") {
  Waveform w = vftest::white_noise(0.731, 44100, 3);
  Waveform r = resample(w, 16000);
  const double in_dur = w.duration();
  const double out_dur = r.duration();
  CHECK(std::abs(in_dur - out_dur) <= 1.0 / 16000.0);
}

TEST_CASE("resample: rejects non-positive target rate") {
  Waveform w = vftest::sine(100.0, 0.05, 16000);
  CHECK_THROWS_AS(resample(w, 0), ConfigError);
}
