// src/vocoder/internal.hpp

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

#ifndef VOICEFORGE_SRC_VOCODER_INTERNAL_HPP_
#define VOICEFORGE_SRC_VOCODER_INTERNAL_HPP_

#include <cstddef>
#include <vector>

#include "voiceforge/audio.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf::detail {

// Grabs `length` samples centered on `center`, zero-padding past the ends.
inline std::vector<double> centered_segment(const Waveform& w, long center,
                                            int length) {
  std::vector<double> seg(length, 0.0);
  const long start = center - length / 2;
  const long n = static_cast<long>(w.samples.size());
  for (int i = 0; i < length; ++i) {
    const long j = start + i;
    if (j >= 0 && j < n) seg[i] = w.samples[static_cast<std::size_t>(j)];
  }
  return seg;
}

// Normalized cross-correlation of x with itself at one lag.
inline double nccf_at(const std::vector<double>& x, int lag) {
  const int n = static_cast<int>(x.size()) - lag;
  if (n <= 0) return 0.0;
  double num = 0.0, e0 = 0.0, e1 = 0.0;
  for (int i = 0; i < n; ++i) {
    num += x[i] * x[i + lag];
    e0 += x[i] * x[i];
    e1 += x[i + lag] * x[i + lag];
  }
  return num / std::sqrt(e0 * e1 + 1e-30);
}

inline void check_grid(const Waveform& w, const F0Track& f0,
                       const VocoderConfig& config, const char* op) {
  const std::size_t expected = vocoder_frame_count(w.samples.size(), config);
  if (f0.frames() != expected)
    throw GridMismatchError(std::string(op) + ": F0 track has " +
                            std::to_string(f0.frames()) + " frames, signal " +
                            std::to_string(expected));
  const double shift_s = config.frame_shift_samples() /
                         static_cast<double>(config.sample_rate);
  if (std::abs(f0.frame_shift - shift_s) > 1e-9)
    throw GridMismatchError(std::string(op) + ": frame shift mismatch");
}

}  // namespace vf::detail

#endif  // VOICEFORGE_SRC_VOCODER_INTERNAL_HPP_
