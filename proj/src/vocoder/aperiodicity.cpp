// src/vocoder/aperiodicity.cpp

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

AperiodicityTrack estimate_aperiodicity(const Waveform& w, const F0Track& f0,
                                        const VocoderConfig& config) {
  detail::check_grid(w, f0, config, "estimate_aperiodicity");

  const int window = config.f0_window_samples();
  const std::size_t nfft = next_pow2(static_cast<std::size_t>(
      std::max(window, config.nfft)));
  const std::size_t bins = nfft / 2 + 1;
  const double bin_hz =
      static_cast<double>(config.sample_rate) / static_cast<double>(nfft);
  const auto win = make_window(WindowType::hann, window);

  AperiodicityTrack track;
  track.frames = f0.frames();
  track.frame_shift = f0.frame_shift;
  track.ratios.assign(track.frames * AperiodicityTrack::kBands, 1.0);

  for (std::size_t t = 0; t < track.frames; ++t) {
    if (!f0.voiced(t)) continue;  // unvoiced stays at 1.0 everywhere

    const int lag = std::clamp(
        static_cast<int>(std::lround(config.sample_rate / f0.values[t])), 2,
        window / 2 - 1);
    // The analysis taper itself decorrelates at the pitch lag; dividing by
    // the window's own correlation removes that bias.
    std::vector<double> tapered(win.begin(), win.end());
    const double win_corr = detail::nccf_at(tapered, lag);

    auto seg = detail::centered_segment(w, config.frame_center(t), window);
    for (int n = 0; n < window; ++n) seg[n] *= win[n];
    const auto spectrum = rfft(seg, nfft);

    for (int b = 0; b < AperiodicityTrack::kBands; ++b) {
      const std::size_t k_lo = static_cast<std::size_t>(
          std::ceil(kBandEdgesHz[b] / bin_hz));
      const std::size_t k_hi = std::min(
          bins, static_cast<std::size_t>(std::ceil(kBandEdgesHz[b + 1] / bin_hz)));

      std::vector<std::complex<double>> band(bins, {0.0, 0.0});
      double band_energy = 0.0;
      for (std::size_t k = k_lo; k < k_hi; ++k) {
        band[k] = spectrum[k];
        band_energy += std::norm(spectrum[k]);
      }
      if (band_energy < 1e-20) continue;  // silent band reads as noise

      const auto y = irfft(band, nfft);
      std::vector<double> head(y.begin(), y.begin() + window);
      double r = detail::nccf_at(head, lag);
      if (win_corr > 1e-6) r /= win_corr;

      const double periodic_fraction = std::clamp(r, 0.0, 1.0);
      track.at(t, b) = std::clamp(1.0 - periodic_fraction, 0.0, 1.0);
    }
  }
  return track;
}

}  // namespace vf
