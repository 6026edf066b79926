// include/voiceforge/nn/network.hpp

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

#ifndef VOICEFORGE_NN_NETWORK_HPP_
#define VOICEFORGE_NN_NETWORK_HPP_

#include <span>
#include <vector>

#include "voiceforge/nn/layers.hpp"

namespace vf::nn {

struct SequenceExample {
  Mat input;   // T x input_dim
  Mat target;  // T x output_dim
};

struct ClassifiedFrames {
  Mat input;               // T x input_dim
  std::vector<int> labels;  // T entries in [0, classes)
};

// Feed-forward frame classifier: sigmoid hidden layers, softmax output.
class DnnClassifier {
 public:
  DnnClassifier() = default;
  DnnClassifier(int input_dim, int hidden_size, int hidden_layers,
                int num_classes, unsigned seed);

  std::size_t input_dim() const;
  std::size_t num_classes() const;
  std::size_t hidden_layers() const { return layers_.size() - 1; }
  std::size_t hidden_size() const {
    return layers_.size() > 1 ? layers_.front().output_dim() : 0;
  }

  // Row-wise class probabilities for a batch of frames.
  Mat forward(const Mat& frames) const;

  // Mean cross-entropy over the batch; parameter gradients accumulate into
  // `grads` (a zeros_like copy of this network).
  double forward_backward(const Mat& frames, const std::vector<int>& labels,
                          DnnClassifier& grads) const;

  DnnClassifier zeros_like() const;

  // Parameter blocks in serialization order: per layer, weight then bias,
  // bottom-up.
  std::vector<std::span<double>> param_views();
  std::vector<std::span<const double>> param_views() const;
  std::size_t param_count() const;

  std::vector<DenseLayer>& layers() { return layers_; }
  const std::vector<DenseLayer>& layers() const { return layers_; }

 private:
  std::vector<DenseLayer> layers_;
};

// Stacked bidirectional LSTM with a linear output layer. Layer l > 0
// consumes the concatenated fwd/bwd hidden states of layer l-1.
class DblstmNetwork {
 public:
  struct BlstmLayer {
    LstmCell fwd;
    LstmCell bwd;
  };

  DblstmNetwork() = default;
  DblstmNetwork(int input_dim, int output_dim, int num_layers, int hidden_size,
                unsigned seed);

  std::size_t input_dim() const { return input_dim_; }
  std::size_t output_dim() const { return output_.output_dim(); }
  std::size_t num_layers() const { return layers_.size(); }
  std::size_t hidden_size() const {
    return layers_.empty() ? 0 : layers_.front().fwd.hidden();
  }

  // T x output_dim regression over the whole sequence.
  Mat forward(const Mat& xs) const;

  // Mean squared error over frames and dims; gradients accumulate into
  // `grads`.
  double forward_backward(const Mat& xs, const Mat& targets,
                          DblstmNetwork& grads) const;

  DblstmNetwork zeros_like() const;

  // Serialization order: per layer (bottom-up) fwd then bwd cell, each as
  // Wi, Wf, Wo, Wg, bi, bf, bo, bg; output layer weight and bias last.
  std::vector<std::span<double>> param_views();
  std::vector<std::span<const double>> param_views() const;
  std::size_t param_count() const;

  std::vector<BlstmLayer>& blstm_layers() { return layers_; }
  const std::vector<BlstmLayer>& blstm_layers() const { return layers_; }
  DenseLayer& output_layer() { return output_; }
  const DenseLayer& output_layer() const { return output_; }

 private:
  std::vector<BlstmLayer> layers_;
  DenseLayer output_;
  std::size_t input_dim_ = 0;
};

}  // namespace vf::nn

#endif  // VOICEFORGE_NN_NETWORK_HPP_
