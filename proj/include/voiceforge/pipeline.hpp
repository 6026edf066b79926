// include/voiceforge/pipeline.hpp

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

#ifndef VOICEFORGE_PIPELINE_HPP_
#define VOICEFORGE_PIPELINE_HPP_

#include <string>
#include <vector>

#include "voiceforge/asr.hpp"
#include "voiceforge/config.hpp"
#include "voiceforge/manifest.hpp"
#include "voiceforge/model_archive.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

// One utterance of supervision: what was said (posteriors) and how the
// target voice renders it (mel-cepstra), truncated to a common frame count.
struct TrainingPair {
  FeatureMatrix posteriors;
  McepTrack mcep;
};

struct PairSet {
  std::vector<TrainingPair> pairs;
  MvnStats target_stats;  // over all mcep frames of the set
};

// Runs the recognizer and the vocoder analysis over every utterance of an
// unlabeled target-voice manifest. Posterior and acoustic grids may differ
// by at most `frame_tolerance` frames (both 5 ms analyses); the longer side
// is truncated. Throws GridMismatchError beyond that, EmptyInputError for
// an empty manifest.
PairSet build_training_pairs(const ModelArchive& asr_model,
                             const DatasetManifest& manifest,
                             const PipelineConfig& config,
                             int frame_tolerance = 2);

// Trains the sequence regression from posteriors to mean-variance
// normalized mel-cepstra; the returned archive embeds the target stats used
// for denormalization.
ModelArchive train_conversion_model(const PairSet& pairs, int num_layers,
                                    int hidden_size,
                                    const nn::OptimizerConfig& opt,
                                    nn::TrainLog* log = nullptr);

struct ConversionJob {
  Waveform source;
  ModelArchive asr_model;
  ModelArchive vc_model;
  std::string output_path;  // informational; the caller writes the file
};

// What convert() did, including the exact excitation tracks handed to the
// synthesizer so passthrough can be asserted from outside.
struct ConversionReport {
  std::size_t posterior_frames = 0;
  std::size_t vocoder_frames = 0;
  std::size_t used_frames = 0;
  F0Track f0_extracted, f0_consumed;
  AperiodicityTrack ap_extracted, ap_consumed;
  double posterior_ms = 0.0;
  double regression_ms = 0.0;
  double analysis_ms = 0.0;
  double synthesis_ms = 0.0;
  double total_ms = 0.0;
};

std::string render_report(const ConversionReport& report);

// The conversion stage: recognizer posteriors from the source, regression
// to target mel-cepstra, synthesis with the source's own F0 and
// aperiodicity passed through unmodified. Deterministic: same models and
// source give a bit-identical waveform.
Waveform convert(const ConversionJob& job, const PipelineConfig& config,
                 ConversionReport* report = nullptr);

void save_train_log(const std::string& path, const nn::TrainLog& log);

}  // namespace vf

#endif  // VOICEFORGE_PIPELINE_HPP_
