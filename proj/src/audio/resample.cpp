// src/audio/resample.cpp

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
#include <numbers>

#include "voiceforge/audio.hpp"
#include "voiceforge/error.hpp"

namespace vf {

namespace {

// Kernel half-width in source samples. With the Kaiser beta below the
// stopband sits around -110 dB.
constexpr int kHalfWidth = 32;
constexpr double kKaiserBeta = 12.0;

double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-14 * sum) break;
  }
  return sum;
}

double kaiser(double t) {  // t in [-1, 1]
  double arg = 1.0 - t * t;
  if (arg < 0.0) return 0.0;
  return bessel_i0(kKaiserBeta * std::sqrt(arg)) / bessel_i0(kKaiserBeta);
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

Waveform resample(const Waveform& w, int target_rate) {
  if (target_rate <= 0)
    throw ConfigError("resample: target rate must be positive");
  if (w.sample_rate <= 0)
    throw ConfigError("resample: source rate must be positive");
  if (target_rate == w.sample_rate) return w;

  const double ratio =
      static_cast<double>(target_rate) / static_cast<double>(w.sample_rate);
  const std::size_t out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(w.samples.size()) * ratio));

  // Anti-alias cutoff in cycles per source sample, with a little headroom
  // below the narrower Nyquist.
  const double cutoff = 0.5 * std::min(1.0, ratio) * 0.95;
  const std::size_t n = w.samples.size();

  Waveform out;
  out.sample_rate = target_rate;
  out.samples.resize(out_len);

  for (std::size_t i = 0; i < out_len; ++i) {
    const double t = static_cast<double>(i) / ratio;  // source position
    const long j0 = static_cast<long>(std::ceil(t)) - kHalfWidth;
    const long j1 = static_cast<long>(std::floor(t)) + kHalfWidth;
    double acc = 0.0;
    for (long j = j0; j <= j1; ++j) {
      if (j < 0 || j >= static_cast<long>(n)) continue;
      const double d = static_cast<double>(j) - t;
      acc += w.samples[static_cast<std::size_t>(j)] * 2.0 * cutoff *
             sinc(2.0 * cutoff * d) * kaiser(d / kHalfWidth);
    }
    out.samples[i] = acc;
  }
  return out;
}

}  // namespace vf
