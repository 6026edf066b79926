// src/synth/corpus.cpp

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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "voiceforge/asr.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/synthcorpus.hpp"

namespace vf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Stationary harmonic tone with power-law rolloff across harmonics.
Waveform harmonic_tone(double f0, double rolloff_exp, double duration,
                       int sample_rate, double gain, std::mt19937& rng) {
  Waveform w;
  w.sample_rate = sample_rate;
  const auto n = static_cast<std::size_t>(duration * sample_rate);
  w.samples.assign(n, 0.0);

  std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);
  double norm = 0.0;
  for (int m = 1; m * f0 < 0.45 * sample_rate; ++m) {
    const double amp = std::pow(static_cast<double>(m), -rolloff_exp);
    const double phase = phase_dist(rng);
    const double step = kTwoPi * m * f0 / sample_rate;
    for (std::size_t i = 0; i < n; ++i)
      w.samples[i] += amp * std::sin(step * static_cast<double>(i) + phase);
    norm += amp;
  }
  std::normal_distribution<double> floor_noise(0.0, 1e-3);
  for (auto& s : w.samples) s = s / norm * gain + floor_noise(rng);
  return w;
}

Waveform noise_clip(double duration, int sample_rate, double gain,
                    std::mt19937& rng) {
  Waveform w;
  w.sample_rate = sample_rate;
  const auto n = static_cast<std::size_t>(duration * sample_rate);
  w.samples.resize(n);
  std::normal_distribution<double> dist(0.0, gain / 3.0);
  for (auto& s : w.samples) s = std::clamp(dist(rng), -1.0, 1.0);
  return w;
}

std::string utt_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "utt_%04zu", index);
  return buf;
}

}  // namespace

Waveform synth_voiced_utterance(double duration, int sample_rate,
                                unsigned seed, double f0_low, double f0_high) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> seg_dur(0.25, 0.5);
  std::uniform_real_distribution<double> f0_dist(f0_low, f0_high);
  std::uniform_real_distribution<double> f1_dist(300.0, 800.0);
  std::uniform_real_distribution<double> f2_dist(900.0, 2200.0);
  std::uniform_real_distribution<double> bw_dist(120.0, 250.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Waveform w;
  w.sample_rate = sample_rate;
  const auto total = static_cast<std::size_t>(duration * sample_rate);
  w.samples.assign(total, 0.0);
  const std::size_t fade = static_cast<std::size_t>(0.010 * sample_rate);

  std::size_t pos = 0;
  while (pos < total) {
    const auto seg_len = std::min(
        total - pos, static_cast<std::size_t>(seg_dur(rng) * sample_rate));
    if (seg_len < fade * 2) break;

    std::vector<double> seg(seg_len, 0.0);
    if (unit(rng) < 0.85) {
      // Voiced: gliding pitch under a two-formant spectral envelope.
      const double f0_a = f0_dist(rng), f0_b = f0_dist(rng);
      const double f1 = f1_dist(rng), b1 = bw_dist(rng);
      const double f2 = f2_dist(rng), b2 = bw_dist(rng);
      auto envelope = [&](double hz) {
        const double g1 = (hz - f1) / b1, g2 = (hz - f2) / b2;
        return std::exp(-g1 * g1) + 0.7 * std::exp(-g2 * g2) + 0.08;
      };

      const double f0_max = std::max(f0_a, f0_b);
      const int harmonics =
          static_cast<int>(0.45 * sample_rate / f0_max);
      std::vector<double> phase(harmonics + 1, 0.0);
      std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);
      for (auto& p : phase) p = phase_dist(rng);

      double norm = 0.0;
      for (int m = 1; m <= harmonics; ++m) norm += envelope(m * f0_max);
      for (std::size_t i = 0; i < seg_len; ++i) {
        const double x = static_cast<double>(i) / seg_len;
        const double f0 = f0_a + (f0_b - f0_a) * x;
        double v = 0.0;
        for (int m = 1; m <= harmonics; ++m) {
          phase[m] += kTwoPi * m * f0 / sample_rate;
          v += envelope(m * f0) * std::sin(phase[m]);
        }
        seg[i] = v / norm * 0.5;
      }
    } else {
      std::normal_distribution<double> breath(0.0, 0.05);
      for (auto& s : seg) s = breath(rng);
    }

    // Raised-cosine edges avoid clicks at segment joins.
    for (std::size_t i = 0; i < fade; ++i) {
      const double g = 0.5 * (1.0 - std::cos(std::numbers::pi * i / fade));
      seg[i] *= g;
      seg[seg_len - 1 - i] *= g;
    }
    for (std::size_t i = 0; i < seg_len; ++i) w.samples[pos + i] += seg[i];
    pos += seg_len;
  }
  return w;
}

void generate_asr_corpus(const std::string& dir,
                         const SynthCorpusConfig& config,
                         const FrontendConfig& frontend) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::mt19937 rng(config.seed);
  std::uniform_real_distribution<double> dur_dist(config.min_duration,
                                                  config.max_duration);
  std::uniform_real_distribution<double> gain_dist(0.2, 0.6);
  std::uniform_real_distribution<double> low_f0(190.0, 240.0);
  std::uniform_real_distribution<double> high_f0(480.0, 560.0);

  std::ofstream manifest(fs::path(dir) / "manifest.txt");
  if (!manifest) throw IoError("cannot write manifest in " + dir);
  std::ofstream inventory(fs::path(dir) / "inventory.txt");
  inventory << "tone_low\ntone_high\nnoise\n";

  const int flen = frontend.mfcc.frame_length_samples();
  const int shift = frontend.mfcc.frame_shift_samples();

  for (int i = 0; i < config.num_utterances; ++i) {
    const int cls = i % 3;
    const double duration = dur_dist(rng);
    const double gain = gain_dist(rng);

    Waveform w;
    switch (cls) {
      case 0:
        w = harmonic_tone(low_f0(rng), 1.0, duration, config.sample_rate,
                          gain, rng);
        break;
      case 1:
        w = harmonic_tone(high_f0(rng), 0.25, duration, config.sample_rate,
                          gain, rng);
        break;
      default:
        w = noise_clip(duration, config.sample_rate, gain, rng);
    }

    const std::string stem = utt_name(static_cast<std::size_t>(i));
    write_wav((fs::path(dir) / (stem + ".wav")).string(), w);
    const std::size_t frames = frame_count(w.samples.size(), flen, shift);
    save_frame_labels((fs::path(dir) / (stem + ".lab")).string(),
                      FrameLabels(frames, cls));
    manifest << stem << ".wav\t" << stem << ".lab\n";
  }
}

void generate_target_corpus(const std::string& dir,
                            const SynthCorpusConfig& config, double f0_low,
                            double f0_high) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::mt19937 rng(config.seed);
  std::uniform_real_distribution<double> dur_dist(config.min_duration,
                                                  config.max_duration);

  std::ofstream manifest(fs::path(dir) / "manifest.txt");
  if (!manifest) throw IoError("cannot write manifest in " + dir);

  for (int i = 0; i < config.num_utterances; ++i) {
    const Waveform w =
        synth_voiced_utterance(dur_dist(rng), config.sample_rate,
                               config.seed + 1000 + static_cast<unsigned>(i),
                               f0_low, f0_high);
    const std::string stem = utt_name(static_cast<std::size_t>(i));
    write_wav((fs::path(dir) / (stem + ".wav")).string(), w);
    manifest << stem << ".wav\n";
  }
}

}  // namespace vf
