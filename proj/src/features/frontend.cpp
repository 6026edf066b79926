// src/features/frontend.cpp

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

#include "voiceforge/error.hpp"
#include "voiceforge/features.hpp"
#include "voiceforge/fft.hpp"

namespace vf {

namespace {

constexpr double kLogFloor = 1e-10;
constexpr double kStdFloor = 1e-8;

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

}  // namespace

std::vector<double> make_window(WindowType type, int length) {
  std::vector<double> w(length, 1.0);
  if (length <= 1) return w;
  const double denom = static_cast<double>(length - 1);
  for (int n = 0; n < length; ++n) {
    const double c = std::cos(2.0 * std::numbers::pi * n / denom);
    w[n] = type == WindowType::hamming ? 0.54 - 0.46 * c : 0.5 * (1.0 - c);
  }
  return w;
}

std::size_t frame_count(std::size_t num_samples, int frame_length, int shift) {
  if (num_samples < static_cast<std::size_t>(frame_length)) return 0;
  return (num_samples - frame_length) / shift + 1;
}

Spectrogram stft(const Waveform& w, int frame_length, int shift,
                 WindowType window) {
  if (frame_length <= 0 || shift <= 0)
    throw ConfigError("stft: frame length and shift must be positive");
  if (w.samples.size() < static_cast<std::size_t>(frame_length))
    throw SignalTooShortError("stft: " + std::to_string(w.samples.size()) +
                              " samples < frame length " +
                              std::to_string(frame_length));

  const std::size_t nfft = next_pow2(static_cast<std::size_t>(frame_length));
  const std::vector<double> win = make_window(window, frame_length);
  const std::size_t frames = frame_count(w.samples.size(), frame_length, shift);

  Spectrogram s;
  s.frames = frames;
  s.nfft = nfft;
  s.bins = nfft / 2 + 1;
  s.frame_shift = static_cast<double>(shift) / w.sample_rate;
  s.data.resize(frames * s.bins);

  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t t = 0; t < frames; ++t) {
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    const std::size_t start = t * shift;
    for (int n = 0; n < frame_length; ++n)
      buf[n] = {w.samples[start + n] * win[n], 0.0};
    fft(buf);
    for (std::size_t b = 0; b < s.bins; ++b) s.at(t, b) = buf[b];
  }
  return s;
}

std::vector<std::vector<double>> mel_filterbank(const MfccConfig& config) {
  const std::size_t bins = static_cast<std::size_t>(config.nfft) / 2 + 1;
  const double mel_lo = hz_to_mel(config.low_freq);
  const double mel_hi = hz_to_mel(config.high_freq);
  const int nf = config.num_filters;

  std::vector<double> edges(nf + 2);
  for (int i = 0; i < nf + 2; ++i)
    edges[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (nf + 1));

  std::vector<std::vector<double>> bank(nf, std::vector<double>(bins, 0.0));
  for (int i = 0; i < nf; ++i) {
    const double left = edges[i], center = edges[i + 1], right = edges[i + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * config.sample_rate / config.nfft;
      double v = 0.0;
      if (f > left && f < right) {
        v = f <= center ? (f - left) / (center - left)
                        : (right - f) / (right - center);
      }
      bank[i][k] = std::max(0.0, v);
    }
  }
  return bank;
}

FeatureMatrix mfcc(const Waveform& w, const MfccConfig& config) {
  const int frame_length = config.frame_length_samples();
  const int shift = config.frame_shift_samples();
  if (w.samples.size() < static_cast<std::size_t>(frame_length))
    throw SignalTooShortError("mfcc: signal shorter than one frame");

  Waveform emphasized;
  emphasized.sample_rate = w.sample_rate;
  emphasized.samples.resize(w.samples.size());
  const double k = config.preemphasis;
  emphasized.samples[0] = w.samples[0] * (1.0 - k);
  for (std::size_t n = 1; n < w.samples.size(); ++n)
    emphasized.samples[n] = w.samples[n] - k * w.samples[n - 1];

  Spectrogram s = stft(emphasized, frame_length, shift, WindowType::hamming);
  const auto bank = mel_filterbank(config);
  const int nf = config.num_filters;
  const int nc = config.num_coeffs;

  // Orthonormal DCT-II rows for coefficients 0..nc-1.
  std::vector<double> dct(static_cast<std::size_t>(nc) * nf);
  for (int j = 0; j < nc; ++j) {
    const double scale = j == 0 ? std::sqrt(1.0 / nf) : std::sqrt(2.0 / nf);
    for (int i = 0; i < nf; ++i)
      dct[j * nf + i] =
          scale * std::cos(std::numbers::pi * j * (2 * i + 1) / (2.0 * nf));
  }

  FeatureMatrix out(s.frames, static_cast<std::size_t>(nc),
                    static_cast<double>(shift) / config.sample_rate);
  std::vector<double> log_energies(nf);
  for (std::size_t t = 0; t < s.frames; ++t) {
    for (int i = 0; i < nf; ++i) {
      double e = 0.0;
      for (std::size_t b = 0; b < s.bins; ++b)
        e += bank[i][b] * std::norm(s.at(t, b));
      log_energies[i] = std::log(std::max(e, kLogFloor));
    }
    for (int j = 0; j < nc; ++j) {
      double c = 0.0;
      for (int i = 0; i < nf; ++i) c += dct[j * nf + i] * log_energies[i];
      out.at(t, j) = c;
    }
  }
  return out;
}

FeatureMatrix stack_context(const FeatureMatrix& m, int left, int right) {
  if (left < 0 || right < 0)
    throw ConfigError("stack_context: context must be non-negative");
  if (m.frames == 0) throw EmptyInputError("stack_context: empty input");

  const int span = left + right + 1;
  FeatureMatrix out(m.frames, m.dims * span, m.frame_shift);
  const long last = static_cast<long>(m.frames) - 1;
  for (std::size_t t = 0; t < m.frames; ++t) {
    for (int j = 0; j < span; ++j) {
      long src = static_cast<long>(t) + j - left;
      src = std::clamp(src, 0L, last);  // replicate edges
      const auto row = m.row(static_cast<std::size_t>(src));
      std::copy(row.begin(), row.end(),
                out.row(t).begin() + static_cast<long>(j * m.dims));
    }
  }
  return out;
}

FeatureMatrix frontend_features(const Waveform& w,
                                const FrontendConfig& config) {
  return stack_context(mfcc(w, config.mfcc), config.context_left,
                       config.context_right);
}

MvnStats mvn_fit(const std::vector<FeatureMatrix>& matrices) {
  std::size_t dims = 0, total = 0;
  for (const auto& m : matrices) {
    if (m.frames == 0) continue;
    if (dims == 0) dims = m.dims;
    if (m.dims != dims)
      throw DimMismatchError("mvn_fit: mixed dims " + std::to_string(dims) +
                             " vs " + std::to_string(m.dims));
    total += m.frames;
  }
  if (total == 0) throw EmptyInputError("mvn_fit: no frames");

  std::vector<double> sum(dims, 0.0), sum_sq(dims, 0.0);
  for (const auto& m : matrices) {
    for (std::size_t t = 0; t < m.frames; ++t) {
      const auto row = m.row(t);
      for (std::size_t d = 0; d < dims; ++d) {
        sum[d] += row[d];
        sum_sq[d] += row[d] * row[d];
      }
    }
  }

  MvnStats stats;
  stats.mean.resize(dims);
  stats.stddev.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    stats.mean[d] = sum[d] / total;
    const double var = sum_sq[d] / total - stats.mean[d] * stats.mean[d];
    stats.stddev[d] = std::max(std::sqrt(std::max(var, 0.0)), kStdFloor);
  }
  return stats;
}

FeatureMatrix mvn_apply(const FeatureMatrix& m, const MvnStats& stats) {
  if (m.dims != stats.mean.size() || m.dims != stats.stddev.size())
    throw DimMismatchError("mvn_apply: matrix dims " + std::to_string(m.dims) +
                           " vs stats dims " +
                           std::to_string(stats.mean.size()));
  FeatureMatrix out = m;
  for (std::size_t t = 0; t < m.frames; ++t) {
    auto row = out.row(t);
    for (std::size_t d = 0; d < m.dims; ++d)
      row[d] = (row[d] - stats.mean[d]) / stats.stddev[d];
  }
  return out;
}

}  // namespace vf
