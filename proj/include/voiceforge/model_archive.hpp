// include/voiceforge/model_archive.hpp

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

#ifndef VOICEFORGE_MODEL_ARCHIVE_HPP_
#define VOICEFORGE_MODEL_ARCHIVE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "voiceforge/features.hpp"
#include "voiceforge/nn/network.hpp"

namespace vf {

// Serialized model: architecture descriptor, input/output normalization
// stats, and the parameters as f32 in a fixed order (dense layers: weight
// then bias, bottom-up; LSTM cells: Wi, Wf, Wo, Wg, bi, bf, bo, bg, fwd
// before bwd, layers bottom-up, output layer last).
//
// VFM1 layout, little-endian: magic "VFM1", u32 kind, u32 input_dim,
// u32 output_dim, u32 num_layers, u32 hidden_size, u32 activation count +
// ids, input stats (u32 dim, f64 mean[], f64 std[]), output stats (same),
// u32 param count, f32 params[], u32 CRC-32 of everything before it.
struct ModelArchive {
  enum class Kind : std::uint32_t { dnn_classifier = 0, dblstm = 1 };

  Kind kind = Kind::dnn_classifier;
  std::uint32_t input_dim = 0;
  std::uint32_t output_dim = 0;
  std::uint32_t num_layers = 0;   // hidden layers (dnn) or BLSTM layers
  std::uint32_t hidden_size = 0;
  std::vector<std::uint32_t> activations;
  MvnStats input_stats;   // empty when inputs are consumed raw
  MvnStats output_stats;  // empty for classifiers
  std::vector<float> params;

  bool operator==(const ModelArchive&) const = default;
};

// Quantizes the network parameters to f32 once, at archive creation.
ModelArchive to_archive(const nn::DnnClassifier& net,
                        const MvnStats& input_stats);
ModelArchive to_archive(const nn::DblstmNetwork& net,
                        const MvnStats& output_stats);

// Rebuilding from an archive is exact: f32 -> f64 loses nothing, so
// to_archive(from_archive(a)) == a bit for bit.
nn::DnnClassifier classifier_from_archive(const ModelArchive& a);
nn::DblstmNetwork dblstm_from_archive(const ModelArchive& a);

// Throws FileNotFoundError, VersionMismatchError (bad magic, naming both),
// CorruptFileError (truncated or inconsistent), or ChecksumError.
void save_model(const std::string& path, const ModelArchive& a);
ModelArchive load_model(const std::string& path);

}  // namespace vf

#endif  // VOICEFORGE_MODEL_ARCHIVE_HPP_
