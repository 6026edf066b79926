// include/voiceforge/config.hpp

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

#ifndef VOICEFORGE_CONFIG_HPP_
#define VOICEFORGE_CONFIG_HPP_

#include <string>

#include "voiceforge/features.hpp"
#include "voiceforge/nn/train.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

// Every knob the pipeline exposes, persisted as flat "key = value" text.
// Doubles are written at full precision so save/load round-trips losslessly.
struct PipelineConfig {
  // Audio / frame grid.
  int sample_rate = 16000;
  double frame_length_ms = 25.0;
  double frame_shift_ms = 5.0;

  // MFCC front end.
  double preemphasis = 0.97;
  int num_mel_filters = 26;
  int num_mfcc = 13;
  int nfft = 512;
  int context_left = 8;
  int context_right = 8;
  std::string inventory = "data/phonemes39.txt";

  // Vocoder.
  double alpha = 0.42;
  double f0_floor = 60.0;
  double f0_ceil = 1000.0;
  int mcep_order = 40;
  // Optional temporal smoothing of predicted tracks (moving-average
  // half-width in frames); 0 = off.
  int mcep_smooth_frames = 0;

  // Architectures.
  int asr_hidden_layers = 4;
  int asr_hidden_size = 2048;
  int vc_layers = 4;
  int vc_hidden = 128;

  // Optimizer.
  double learning_rate = 1e-3;
  double momentum = 0.9;
  double grad_clip = 5.0;
  int epochs = 20;
  unsigned seed = 1234;

  MfccConfig mfcc_config() const;
  FrontendConfig frontend() const;
  VocoderConfig vocoder_config() const;
  nn::OptimizerConfig optimizer() const;

  // Throws ConfigError when a value is outside its documented range.
  void validate() const;

  void save(const std::string& path) const;
  static PipelineConfig load(const std::string& path);
};

}  // namespace vf

#endif  // VOICEFORGE_CONFIG_HPP_
