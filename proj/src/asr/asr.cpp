// src/asr/asr.cpp

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
#include <string>

#include "voiceforge/asr.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/parallel.hpp"

namespace vf {

namespace {

nn::Mat to_mat(const FeatureMatrix& m) {
  nn::Mat out(m.frames, m.dims);
  std::copy(m.data.begin(), m.data.end(), out.flat().begin());
  return out;
}

// Reads one utterance at the pipeline rate.
Waveform read_utterance(const std::string& path, int sample_rate) {
  return resample(read_wav(path), sample_rate);
}

struct LoadedUtterance {
  FeatureMatrix features;
  FrameLabels labels;
};

LoadedUtterance load_labeled(const ManifestEntry& entry,
                             const FrontendConfig& config,
                             std::size_t num_classes, int tolerance) {
  if (!entry.labeled())
    throw LabelMismatchError("utterance " + entry.audio_path +
                             " has no label file");
  LoadedUtterance u;
  u.features = frontend_features(
      read_utterance(entry.audio_path, config.mfcc.sample_rate), config);
  u.labels = load_frame_labels(entry.label_path);

  const long diff = static_cast<long>(u.features.frames) -
                    static_cast<long>(u.labels.size());
  if (std::labs(diff) > tolerance)
    throw LabelMismatchError(
        entry.audio_path + ": " + std::to_string(u.labels.size()) +
        " labels for " + std::to_string(u.features.frames) + " frames");
  const std::size_t n = std::min(u.features.frames, u.labels.size());
  u.features.truncate(n);
  u.labels.resize(n);

  for (int v : u.labels)
    if (v < 0 || static_cast<std::size_t>(v) >= num_classes)
      throw LabelMismatchError(entry.label_path + ": label " +
                               std::to_string(v) + " outside inventory of " +
                               std::to_string(num_classes));
  return u;
}

}  // namespace

ModelArchive train_asr(const DatasetManifest& manifest,
                       const PhonemeInventory& inventory,
                       const AsrTrainConfig& config, nn::TrainLog* log) {
  if (manifest.entries.empty())
    throw EmptyInputError("train_asr: empty manifest");

  // Feature extraction is pure per utterance, so it can fan out.
  std::vector<LoadedUtterance> utts(manifest.size());
  parallel_for(manifest.size(), [&](std::size_t i) {
    utts[i] = load_labeled(manifest.entries[i], config.frontend,
                           inventory.size(), config.label_tolerance_frames);
  });

  std::vector<FeatureMatrix> all_features;
  all_features.reserve(utts.size());
  for (const auto& u : utts) all_features.push_back(u.features);
  const MvnStats stats = mvn_fit(all_features);

  std::vector<nn::ClassifiedFrames> train_set, val_set;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    nn::ClassifiedFrames ex{to_mat(mvn_apply(utts[i].features, stats)),
                            utts[i].labels};
    const bool is_val = config.validation_stride > 0 &&
                        i % config.validation_stride ==
                            static_cast<std::size_t>(
                                config.validation_stride - 1);
    (is_val ? val_set : train_set).push_back(std::move(ex));
  }
  if (train_set.empty()) train_set.swap(val_set);
  if (val_set.empty() && train_set.size() > 1) {
    val_set.push_back(train_set.back());
    train_set.pop_back();
  }

  nn::DnnClassifier net(
      static_cast<int>(config.frontend.stacked_dims()), config.hidden_size,
      config.hidden_layers, static_cast<int>(inventory.size()),
      config.optimizer.seed);
  nn::TrainLog local_log = nn::train(net, train_set, val_set,
                                     nn::Loss::cross_entropy,
                                     config.optimizer);
  if (log) *log = local_log;

  return to_archive(net, stats);
}

FeatureMatrix posteriorgram(const ModelArchive& model, const Waveform& w,
                            const FrontendConfig& config) {
  if (model.kind != ModelArchive::Kind::dnn_classifier)
    throw ArchitectureMismatchError(
        "posteriorgram: archive is not a classifier");
  FeatureMatrix features = frontend_features(
      w.sample_rate == config.mfcc.sample_rate
          ? w
          : resample(w, config.mfcc.sample_rate),
      config);
  if (features.dims != model.input_dim)
    throw ArchitectureMismatchError(
        "posteriorgram: front end produces " + std::to_string(features.dims) +
        " dims but the model expects " + std::to_string(model.input_dim));

  const nn::DnnClassifier net = classifier_from_archive(model);
  const nn::Mat probs =
      net.forward(to_mat(mvn_apply(features, model.input_stats)));

  FeatureMatrix out(features.frames, model.output_dim, features.frame_shift);
  std::copy(probs.flat().begin(), probs.flat().end(), out.data.begin());
  return out;
}

double frame_accuracy(const ModelArchive& model,
                      const DatasetManifest& manifest,
                      const FrontendConfig& config,
                      int label_tolerance_frames) {
  if (manifest.entries.empty())
    throw EmptyInputError("frame_accuracy: empty manifest");

  std::vector<std::size_t> hits(manifest.size(), 0), totals(manifest.size(), 0);
  parallel_for(manifest.size(), [&](std::size_t i) {
    const auto& entry = manifest.entries[i];
    if (!entry.labeled())
      throw LabelMismatchError("frame_accuracy: " + entry.audio_path +
                               " has no label file");
    const Waveform w =
        read_utterance(entry.audio_path, config.mfcc.sample_rate);
    const FeatureMatrix post = posteriorgram(model, w, config);
    FrameLabels labels = load_frame_labels(entry.label_path);

    const long diff = static_cast<long>(post.frames) -
                      static_cast<long>(labels.size());
    if (std::labs(diff) > label_tolerance_frames)
      throw LabelMismatchError(entry.audio_path + ": label/frame mismatch");
    const std::size_t n = std::min(post.frames, labels.size());
    for (std::size_t t = 0; t < n; ++t) {
      hits[i] += nn::argmax_row(post.row(t)) == labels[t] ? 1 : 0;
      ++totals[i];
    }
  });

  std::size_t hit = 0, total = 0;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    hit += hits[i];
    total += totals[i];
  }
  return total == 0 ? 0.0 : static_cast<double>(hit) / total;
}

}  // namespace vf
