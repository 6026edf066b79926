// src/vocoder/envelope.cpp

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
#include "voiceforge/fft.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

namespace {

constexpr double kEnvelopeFloor = 1e-10;
constexpr double kUnvoicedSmoothHz = 500.0;

}  // namespace

FeatureMatrix spectral_envelope(const Waveform& w, const F0Track& f0,
                                const VocoderConfig& config) {
  detail::check_grid(w, f0, config, "spectral_envelope");

  const std::size_t nfft = next_pow2(static_cast<std::size_t>(config.nfft));
  const std::size_t bins = nfft / 2 + 1;
  const double bin_hz =
      static_cast<double>(config.sample_rate) / static_cast<double>(nfft);

  FeatureMatrix env(f0.frames(), bins, f0.frame_shift);
  std::vector<double> raw(bins), prefix(bins + 1);

  for (std::size_t t = 0; t < f0.frames(); ++t) {
    const bool voiced = f0.voiced(t);
    int wlen = config.frame_length_samples();
    if (voiced) {
      const double period = config.sample_rate / f0.values[t];
      wlen = std::clamp(static_cast<int>(std::lround(3.0 * period)), 32,
                        static_cast<int>(nfft));
    }

    auto seg = detail::centered_segment(w, config.frame_center(t), wlen);
    const auto win = make_window(WindowType::hann, wlen);
    double win_energy = 0.0;
    for (int n = 0; n < wlen; ++n) {
      seg[n] *= win[n];
      win_energy += win[n] * win[n];
    }
    const auto spectrum = rfft(seg, nfft);
    for (std::size_t k = 0; k < bins; ++k)
      raw[k] = std::norm(spectrum[k]) / win_energy;

    // Moving average across frequency, one harmonic spacing wide.
    const double smooth_hz = voiced ? f0.values[t] : kUnvoicedSmoothHz;
    const long half = std::max(1L, std::lround(smooth_hz / bin_hz / 2.0));
    prefix[0] = 0.0;
    for (std::size_t k = 0; k < bins; ++k) prefix[k + 1] = prefix[k] + raw[k];
    for (std::size_t k = 0; k < bins; ++k) {
      const long lo = std::max(0L, static_cast<long>(k) - half);
      const long hi =
          std::min(static_cast<long>(bins) - 1, static_cast<long>(k) + half);
      const double mean = (prefix[hi + 1] - prefix[lo]) / (hi - lo + 1);
      env.at(t, k) = std::max(mean, kEnvelopeFloor);
    }
  }
  return env;
}

}  // namespace vf
