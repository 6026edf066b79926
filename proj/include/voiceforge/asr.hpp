// include/voiceforge/asr.hpp

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

#ifndef VOICEFORGE_ASR_HPP_
#define VOICEFORGE_ASR_HPP_

#include <string>
#include <vector>

#include "voiceforge/audio.hpp"
#include "voiceforge/features.hpp"
#include "voiceforge/manifest.hpp"
#include "voiceforge/model_archive.hpp"
#include "voiceforge/nn/train.hpp"

namespace vf {

struct PhonemeInventory {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
};

// One label per line; labels must be unique and at least two. Throws
// FileNotFoundError or ConfigError.
PhonemeInventory load_inventory(const std::string& path);

// Per-frame class indices aligned to the front-end frame grid.
using FrameLabels = std::vector<int>;

// One integer per line. Throws FileNotFoundError or ConfigError.
FrameLabels load_frame_labels(const std::string& path);
void save_frame_labels(const std::string& path, const FrameLabels& labels);

struct AsrTrainConfig {
  FrontendConfig frontend;
  int hidden_layers = 4;
  int hidden_size = 2048;
  nn::OptimizerConfig optimizer;
  // Utterances whose index satisfies idx % validation_stride ==
  // validation_stride - 1 form the validation split.
  int validation_stride = 10;
  // Labels may disagree with the frame count by up to this much; the
  // longer side is truncated. Larger gaps abort.
  int label_tolerance_frames = 2;
};

// Trains the frame classifier on a labeled manifest. Features are
// MFCC -> context stacking -> mean-variance normalization; the stats land
// in the archive so inference reproduces the exact inputs. Per-epoch
// validation accuracy is logged and the best-validation parameters are
// kept. Throws EmptyInputError, LabelMismatchError.
ModelArchive train_asr(const DatasetManifest& manifest,
                       const PhonemeInventory& inventory,
                       const AsrTrainConfig& config,
                       nn::TrainLog* log = nullptr);

// Runs the classifier over an utterance; rows are per-frame phoneme
// posterior distributions on the frame grid. Throws
// ArchitectureMismatchError when the archive is not a classifier or its
// input size does not match the front end.
FeatureMatrix posteriorgram(const ModelArchive& model, const Waveform& w,
                            const FrontendConfig& config);

// Fraction of frames whose argmax posterior (ties to the lowest index)
// matches the reference label, over every labeled utterance.
double frame_accuracy(const ModelArchive& model,
                      const DatasetManifest& manifest,
                      const FrontendConfig& config,
                      int label_tolerance_frames = 2);

}  // namespace vf

#endif  // VOICEFORGE_ASR_HPP_
