// include/voiceforge/feature_matrix.hpp

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

#ifndef VOICEFORGE_FEATURE_MATRIX_HPP_
#define VOICEFORGE_FEATURE_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vf {

// frames x dims row-major matrix carrying a frame shift in seconds. MFCCs,
// stacked contexts, posteriorgrams and mel-cepstrum tracks all use this
// shape, and they all share the on-disk FMAT format below.
struct FeatureMatrix {
  std::size_t frames = 0;
  std::size_t dims = 0;
  double frame_shift = 0.0;  // seconds
  std::vector<double> data;  // frames * dims

  FeatureMatrix() = default;
  FeatureMatrix(std::size_t f, std::size_t d, double shift)
      : frames(f), dims(d), frame_shift(shift), data(f * d, 0.0) {}

  double& at(std::size_t f, std::size_t d) { return data[f * dims + d]; }
  double at(std::size_t f, std::size_t d) const { return data[f * dims + d]; }

  std::span<double> row(std::size_t f) {
    return {data.data() + f * dims, dims};
  }
  std::span<const double> row(std::size_t f) const {
    return {data.data() + f * dims, dims};
  }

  // Drops trailing frames; keeps dims and frame shift.
  void truncate(std::size_t new_frames);
};

// FMAT format: magic "FMAT", u32 version, u32 frames, u32 dims,
// f64 frame_shift, then row-major f32 data. Little-endian throughout.
// Values round-trip through f32, so a matrix loaded from disk re-saves
// byte-identically.
void save_feature_matrix(const std::string& path, const FeatureMatrix& m);
FeatureMatrix load_feature_matrix(const std::string& path);

}  // namespace vf

#endif  // VOICEFORGE_FEATURE_MATRIX_HPP_
