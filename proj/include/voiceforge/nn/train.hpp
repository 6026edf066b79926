// include/voiceforge/nn/train.hpp

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

#ifndef VOICEFORGE_NN_TRAIN_HPP_
#define VOICEFORGE_NN_TRAIN_HPP_

#include <vector>

#include "voiceforge/nn/network.hpp"

namespace vf::nn {

enum class Loss { mse, cross_entropy };

struct OptimizerConfig {
  double learning_rate = 1e-3;
  double momentum = 0.9;
  double grad_clip = 5.0;  // global gradient-norm ceiling
  int epochs = 10;
  unsigned seed = 1234;
  bool shuffle = true;
  // Stop early once the epoch mean loss drops to this value (0 disables).
  double stop_loss = 0.0;
};

struct TrainLog {
  std::vector<double> epoch_loss;
  std::vector<double> epoch_val_accuracy;  // classifier runs with a val set
  int best_epoch = -1;
};

double mean_squared_error(const Mat& pred, const Mat& target);
double frame_cross_entropy(const Mat& probs, const std::vector<int>& labels);

// Argmax with ties resolved to the lowest index.
int argmax_row(std::span<const double> row);

// Sequence regression with momentum SGD, one update per sequence, gradients
// clipped by global norm. Deterministic for a fixed config seed. Throws
// NumericError when the loss goes non-finite.
TrainLog train(DblstmNetwork& net, const std::vector<SequenceExample>& data,
               Loss loss, const OptimizerConfig& opt);

// Frame classification; one update per utterance. When val is non-empty,
// per-epoch validation frame accuracy is logged and the best-validation
// parameters are restored at the end.
TrainLog train(DnnClassifier& net, const std::vector<ClassifiedFrames>& data,
               const std::vector<ClassifiedFrames>& val, Loss loss,
               const OptimizerConfig& opt);

// Central-difference gradient verification (step 1e-5, double precision)
// over every parameter. Returns max |ga-gn| / max(|ga|, |gn|, 1e-8).
double grad_check(DblstmNetwork& net, const SequenceExample& sample, Loss loss);
double grad_check(DnnClassifier& net, const ClassifiedFrames& sample);

}  // namespace vf::nn

#endif  // VOICEFORGE_NN_TRAIN_HPP_
