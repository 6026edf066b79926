// src/vocoder/synthesis.cpp

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
#include <numbers>
#include <random>

#include "voiceforge/error.hpp"
#include "voiceforge/fft.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

namespace {

// Fixed noise seed keeps synthesis bit-reproducible for identical inputs.
constexpr unsigned kNoiseSeed = 0x563F0E5Du;

int band_of(double freq_hz) {
  for (int b = 1; b < static_cast<int>(kBandEdgesHz.size()) - 1; ++b)
    if (freq_hz < kBandEdgesHz[b]) return b - 1;
  return AperiodicityTrack::kBands - 1;
}

}  // namespace

Waveform synthesize(const AcousticAnalysis& a, int sample_rate,
                    const VocoderConfig& config) {
  const std::size_t frames = a.f0.frames();
  if (frames == 0) throw EmptyInputError("synthesize: empty analysis");
  if (a.ap.frames != frames || a.mcep.coeffs.frames != frames)
    throw GridMismatchError(
        "synthesize: track frame counts differ (f0 " + std::to_string(frames) +
        ", ap " + std::to_string(a.ap.frames) + ", mcep " +
        std::to_string(a.mcep.coeffs.frames) + ")");
  if (std::abs(a.ap.frame_shift - a.f0.frame_shift) > 1e-9 ||
      std::abs(a.mcep.coeffs.frame_shift - a.f0.frame_shift) > 1e-9)
    throw GridMismatchError("synthesize: track frame shifts differ");

  const int shift =
      static_cast<int>(std::lround(a.f0.frame_shift * sample_rate));
  const int wlen = 5 * shift;  // 25 ms synthesis window at a 5 ms hop
  const std::size_t nfft = next_pow2(static_cast<std::size_t>(
      std::max(config.nfft, 2 * wlen)));
  const std::size_t bins = nfft / 2 + 1;
  const std::size_t out_len = (frames - 1) * shift + wlen;
  const int half = wlen / 2;

  const FeatureMatrix env = melcep_decode(a.mcep, static_cast<int>(nfft));

  auto frame_of = [&](std::size_t n) {
    const long idx =
        std::lround((static_cast<double>(n) - half) / shift);
    return static_cast<std::size_t>(
        std::clamp(idx, 0L, static_cast<long>(frames) - 1));
  };

  // Unit-power excitation components over the whole timeline: an impulse
  // train driven by a running phase, and white Gaussian noise.
  std::vector<double> pulse(out_len, 0.0), noise(out_len);
  std::mt19937 rng(kNoiseSeed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& v : noise) v = gauss(rng);

  double phase = 1.0;  // emit a pulse at the first voiced sample
  for (std::size_t n = 0; n < out_len; ++n) {
    const double f0 = a.f0.values[frame_of(n)];
    if (f0 <= 0.0) continue;
    phase += f0 / sample_rate;
    if (phase >= 1.0) {
      phase -= 1.0;
      pulse[n] = std::sqrt(sample_rate / f0);  // unit average power
    }
  }

  // Periodic Hann: sums to a constant at integer fractions of the length.
  std::vector<double> win(wlen);
  for (int n = 0; n < wlen; ++n)
    win[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / wlen));

  std::vector<int> bin_band(bins);
  for (std::size_t k = 0; k < bins; ++k)
    bin_band[k] = band_of(static_cast<double>(k) * sample_rate /
                          static_cast<double>(nfft));

  std::vector<double> out(out_len, 0.0);
  std::vector<double> pseg(wlen), nseg(wlen);
  for (std::size_t t = 0; t < frames; ++t) {
    const long start = static_cast<long>(t) * shift;
    for (int n = 0; n < wlen; ++n) {
      const long j = start + n;
      const double w = win[n];
      pseg[n] = j < static_cast<long>(out_len) ? pulse[j] * w : 0.0;
      nseg[n] = j < static_cast<long>(out_len) ? noise[j] * w : 0.0;
    }
    auto pspec = rfft(pseg, nfft);
    const auto nspec = rfft(nseg, nfft);

    for (std::size_t k = 0; k < bins; ++k) {
      const double ratio =
          std::clamp(a.ap.at(t, bin_band[k]), 0.0, 1.0);
      const std::complex<double> excitation =
          std::sqrt(1.0 - ratio) * pspec[k] + std::sqrt(ratio) * nspec[k];
      pspec[k] = excitation * std::sqrt(env.at(t, k));
    }
    const auto y = irfft(pspec, nfft);
    const std::size_t copy =
        std::min(nfft, out_len - static_cast<std::size_t>(start));
    for (std::size_t n = 0; n < copy; ++n) out[start + n] += y[n];
  }

  double peak = 0.0;
  for (double v : out) {
    if (!std::isfinite(v))
      throw NumericError("synthesize: non-finite sample produced");
    peak = std::max(peak, std::abs(v));
  }
  if (peak > 0.0) {
    const double g = 0.9 / peak;
    for (auto& v : out) v *= g;
  }

  Waveform w;
  w.sample_rate = sample_rate;
  w.samples = std::move(out);
  return w;
}

}  // namespace vf
