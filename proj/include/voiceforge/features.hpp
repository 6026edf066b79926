// include/voiceforge/features.hpp

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

#ifndef VOICEFORGE_FEATURES_HPP_
#define VOICEFORGE_FEATURES_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "voiceforge/audio.hpp"
#include "voiceforge/feature_matrix.hpp"

namespace vf {

enum class WindowType { hamming, hann };

std::vector<double> make_window(WindowType type, int length);

// Frames start at t*shift and cover frame_length samples:
// frames = floor((n - frame_length) / shift) + 1.
std::size_t frame_count(std::size_t num_samples, int frame_length, int shift);

struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;  // nfft/2 + 1
  std::size_t nfft = 0;
  double frame_shift = 0.0;  // seconds
  std::vector<std::complex<double>> data;

  std::complex<double>& at(std::size_t f, std::size_t b) {
    return data[f * bins + b];
  }
  const std::complex<double>& at(std::size_t f, std::size_t b) const {
    return data[f * bins + b];
  }
};

// Short-time transform. Each frame is windowed then zero-padded to
// nfft = next power of two >= frame_length. Throws SignalTooShortError when
// the signal is shorter than one frame.
Spectrogram stft(const Waveform& w, int frame_length, int shift,
                 WindowType window);

struct MfccConfig {
  int sample_rate = 16000;
  double frame_length_ms = 25.0;
  double frame_shift_ms = 5.0;
  double preemphasis = 0.97;
  int num_filters = 26;
  int num_coeffs = 13;
  int nfft = 512;
  double low_freq = 0.0;
  double high_freq = 8000.0;

  int frame_length_samples() const {
    return static_cast<int>(frame_length_ms * sample_rate / 1000.0 + 0.5);
  }
  int frame_shift_samples() const {
    return static_cast<int>(frame_shift_ms * sample_rate / 1000.0 + 0.5);
  }
};

// Pre-emphasis, Hamming-windowed power spectrum, triangular mel filterbank,
// floored log, orthonormal DCT-II keeping coefficients 0..num_coeffs-1.
FeatureMatrix mfcc(const Waveform& w, const MfccConfig& config);

// Center frequencies and triangular weights of the mel filterbank, exposed
// for reuse; weights has num_filters rows of nfft/2+1 entries.
std::vector<std::vector<double>> mel_filterbank(const MfccConfig& config);

// Splices frames t-left .. t+right into one row per frame, replicating edge
// frames at the boundaries. Output dims = (left+right+1) * input dims.
FeatureMatrix stack_context(const FeatureMatrix& m, int left, int right);

// MFCC extraction plus context splicing; the front half of the recognizer.
struct FrontendConfig {
  MfccConfig mfcc;
  int context_left = 8;
  int context_right = 8;

  std::size_t stacked_dims() const {
    return static_cast<std::size_t>(mfcc.num_coeffs) *
           (context_left + context_right + 1);
  }
};

FeatureMatrix frontend_features(const Waveform& w,
                                const FrontendConfig& config);

struct MvnStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // population std, floored at 1e-8
};

MvnStats mvn_fit(const std::vector<FeatureMatrix>& matrices);
FeatureMatrix mvn_apply(const FeatureMatrix& m, const MvnStats& stats);

}  // namespace vf

#endif  // VOICEFORGE_FEATURES_HPP_
