// include/voiceforge/vocoder.hpp

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

#ifndef VOICEFORGE_VOCODER_HPP_
#define VOICEFORGE_VOCODER_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "voiceforge/audio.hpp"
#include "voiceforge/feature_matrix.hpp"

namespace vf {

// Aperiodicity band edges in Hz: 0-1, 1-2, 2-4, 4-6, 6-8 kHz.
inline constexpr std::array<double, 6> kBandEdgesHz = {0.0,    1000.0, 2000.0,
                                                       4000.0, 6000.0, 8000.0};

struct VocoderConfig {
  int sample_rate = 16000;
  double frame_shift_ms = 5.0;
  // Nominal analysis frame; defines the shared frame grid. The F0 and
  // aperiodicity correlators look at a wider centered window.
  double frame_length_ms = 25.0;
  double f0_window_ms = 40.0;
  double f0_floor = 60.0;
  double f0_ceil = 1000.0;
  double voicing_threshold = 0.3;  // normalized autocorrelation peak
  double rms_threshold = 1e-4;
  double alpha = 0.42;  // frequency-warping coefficient for 16 kHz
  int mcep_order = 40;
  int nfft = 1024;

  int frame_shift_samples() const {
    return static_cast<int>(frame_shift_ms * sample_rate / 1000.0 + 0.5);
  }
  int frame_length_samples() const {
    return static_cast<int>(frame_length_ms * sample_rate / 1000.0 + 0.5);
  }
  int f0_window_samples() const {
    return static_cast<int>(f0_window_ms * sample_rate / 1000.0 + 0.5);
  }
  // Analysis instant of frame t, shared by every track.
  long frame_center(std::size_t t) const {
    return static_cast<long>(t) * frame_shift_samples() +
           frame_length_samples() / 2;
  }
};

// All vocoder tracks use the same count as the front end so that feature and
// acoustic grids line up frame for frame.
std::size_t vocoder_frame_count(std::size_t num_samples,
                                const VocoderConfig& config);

struct F0Track {
  std::vector<double> values;  // Hz, 0 = unvoiced
  double frame_shift = 0.005;  // seconds

  std::size_t frames() const { return values.size(); }
  bool voiced(std::size_t t) const { return values[t] > 0.0; }

  bool operator==(const F0Track&) const = default;
};

struct AperiodicityTrack {
  static constexpr int kBands = 5;
  std::size_t frames = 0;
  double frame_shift = 0.005;
  std::vector<double> ratios;  // frames * kBands, each in [0, 1]

  double& at(std::size_t t, int b) { return ratios[t * kBands + b]; }
  double at(std::size_t t, int b) const { return ratios[t * kBands + b]; }

  bool operator==(const AperiodicityTrack&) const = default;
};

struct McepTrack {
  FeatureMatrix coeffs;  // frames x order
  double alpha = 0.42;
  // Size of the uniform warped grid the coefficients were computed on;
  // fixes the DCT normalization so decoding is grid-independent.
  std::size_t warp_bins = 513;
};

// Per-utterance bundle. All three tracks share frame count and frame shift.
struct AcousticAnalysis {
  F0Track f0;
  AperiodicityTrack ap;
  McepTrack mcep;

  std::size_t frames() const { return f0.frames(); }
};

// Normalized-autocorrelation pitch tracker over a centered window. A frame
// is voiced when the correlation peak clears the voicing threshold and the
// frame has audible energy; unvoiced frames get 0. Parabolic interpolation
// refines the winning lag.
F0Track estimate_f0(const Waveform& w, const VocoderConfig& config = {});

// Band aperiodicity: one minus the periodic-energy fraction of each band,
// measured by band-filtered normalized autocorrelation at the pitch lag.
// Unvoiced frames get 1.0 in every band.
AperiodicityTrack estimate_aperiodicity(const Waveform& w, const F0Track& f0,
                                        const VocoderConfig& config = {});

// Smooth positive power envelope per frame (nfft/2+1 bins): pitch-adaptive
// window (three periods when voiced, the nominal frame when unvoiced),
// moving-average smoothed across frequency by one harmonic spacing.
FeatureMatrix spectral_envelope(const Waveform& w, const F0Track& f0,
                                const VocoderConfig& config = {});

// Phase response of a first-order all-pass: the warped frequency axis.
// warp_frequency(w, -alpha) inverts warp_frequency(w, alpha).
double warp_frequency(double omega, double alpha);

// Log envelope resampled onto the uniform warped axis, then orthonormal
// DCT-II truncated to `order` coefficients.
McepTrack melcep_encode(const FeatureMatrix& envelope, double alpha = 0.42,
                        int order = 40);

// Inverse: evaluate the truncated cosine series on the warped axis at each
// linear-frequency bin and exponentiate.
FeatureMatrix melcep_decode(const McepTrack& mcep, int nfft);

// Full analysis pass; the three tracks come out on one frame grid.
AcousticAnalysis analyze(const Waveform& w, const VocoderConfig& config = {});

// Pulse-plus-noise excitation shaped by the decoded envelope, overlap-added
// with Hann windows at the track frame shift. Output is peak-normalized
// to 0.9.
Waveform synthesize(const AcousticAnalysis& a, int sample_rate,
                    const VocoderConfig& config = {});

// On-disk form: <basename>.f0.fmat (dims 1), <basename>.ap.fmat (dims 5),
// <basename>.mcep.fmat (dims order), plus <basename>.meta with the scalar
// parameters.
void save_analysis(const std::string& basename, const AcousticAnalysis& a,
                   const VocoderConfig& config = {});
AcousticAnalysis load_analysis(const std::string& basename);

}  // namespace vf

#endif  // VOICEFORGE_VOCODER_HPP_
