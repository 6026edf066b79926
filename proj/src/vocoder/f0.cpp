// src/vocoder/f0.cpp

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

#include "src/vocoder/internal.hpp"
#include "voiceforge/features.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

std::size_t vocoder_frame_count(std::size_t num_samples,
                                const VocoderConfig& config) {
  return frame_count(num_samples, config.frame_length_samples(),
                     config.frame_shift_samples());
}

F0Track estimate_f0(const Waveform& w, const VocoderConfig& config) {
  const std::size_t frames = vocoder_frame_count(w.samples.size(), config);
  if (frames == 0)
    throw SignalTooShortError("estimate_f0: signal shorter than one frame");

  const int window = config.f0_window_samples();
  const int lag_min = std::max(
      2, static_cast<int>(config.sample_rate / config.f0_ceil));
  const int lag_max = std::min(
      window / 2,
      static_cast<int>(std::ceil(config.sample_rate / config.f0_floor)));

  F0Track track;
  track.frame_shift =
      config.frame_shift_samples() / static_cast<double>(config.sample_rate);
  track.values.assign(frames, 0.0);

  std::vector<double> corr(lag_max + 1, 0.0);
  for (std::size_t t = 0; t < frames; ++t) {
    const auto seg =
        detail::centered_segment(w, config.frame_center(t), window);

    double energy = 0.0;
    for (double s : seg) energy += s * s;
    const double rms = std::sqrt(energy / window);
    if (rms < config.rms_threshold) continue;

    // Prefix sums make the per-lag normalization O(1).
    std::vector<double> prefix_sq(window + 1, 0.0);
    for (int n = 0; n < window; ++n)
      prefix_sq[n + 1] = prefix_sq[n] + seg[n] * seg[n];

    double best = -1.0;
    for (int lag = lag_min; lag <= lag_max; ++lag) {
      double num = 0.0;
      const int n = window - lag;
      for (int i = 0; i < n; ++i) num += seg[i] * seg[i + lag];
      const double e0 = prefix_sq[n];
      const double e1 = prefix_sq[window] - prefix_sq[lag];
      corr[lag] = num / std::sqrt(e0 * e1 + 1e-30);
      best = std::max(best, corr[lag]);
    }
    if (best < config.voicing_threshold) continue;

    // Prefer the shortest lag among near-best local maxima; this keeps the
    // tracker on the fundamental instead of an octave below it.
    int chosen = -1;
    const double bar = std::max(config.voicing_threshold, 0.95 * best);
    for (int lag = lag_min + 1; lag < lag_max; ++lag) {
      if (corr[lag] >= bar && corr[lag] >= corr[lag - 1] &&
          corr[lag] >= corr[lag + 1]) {
        chosen = lag;
        break;
      }
    }
    if (chosen < 0) {
      for (int lag = lag_min; lag <= lag_max; ++lag) {
        if (corr[lag] == best) {
          chosen = lag;
          break;
        }
      }
    }

    double refined = chosen;
    if (chosen > lag_min && chosen < lag_max) {
      const double a = corr[chosen - 1], b = corr[chosen], c = corr[chosen + 1];
      const double denom = a - 2.0 * b + c;
      if (std::abs(denom) > 1e-12) {
        const double delta = 0.5 * (a - c) / denom;
        refined += std::clamp(delta, -0.5, 0.5);
      }
    }

    const double f0 = config.sample_rate / refined;
    track.values[t] = std::clamp(f0, config.f0_floor, config.f0_ceil);
  }
  return track;
}

}  // namespace vf
