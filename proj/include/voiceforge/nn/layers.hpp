// include/voiceforge/nn/layers.hpp

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

#ifndef VOICEFORGE_NN_LAYERS_HPP_
#define VOICEFORGE_NN_LAYERS_HPP_

#include <cstdint>
#include <span>

#include "voiceforge/nn/linalg.hpp"

namespace vf::nn {

enum class Activation : std::uint32_t {
  identity = 0,
  sigmoid = 1,
  tanh = 2,
  relu = 3,
  softmax = 4,
};

// Applies the activation elementwise; softmax normalizes the whole span.
void activate(Activation act, std::span<double> z);

// Numerically stable softmax: shifts by the max before exponentiating.
void softmax_inplace(std::span<double> z);
Vec softmax(Vec z);

struct DenseLayer {
  Mat weight;  // output_dim x input_dim
  Vec bias;    // output_dim
  Activation activation = Activation::identity;

  std::size_t input_dim() const { return weight.cols(); }
  std::size_t output_dim() const { return weight.rows(); }
};

// sigma(W x + b). Throws DimMismatchError when x has the wrong size.
Vec dense_forward(const DenseLayer& layer, std::span<const double> x);

// One memory block: input, forget, output gates and the candidate update,
// all over the concatenation [x_t, h_prev]. No peepholes.
struct LstmCell {
  Mat wi, wf, wo, wg;  // hidden x (input + hidden)
  Vec bi, bf, bo, bg;  // hidden

  std::size_t hidden() const { return wi.rows(); }
  std::size_t input_dim() const { return wi.cols() - wi.rows(); }
};

struct LstmState {
  Vec h;
  Vec c;
};

// i = sig(Wi u), f = sig(Wf u), o = sig(Wo u), g = tanh(Wg u) with
// u = [x, h_prev]; c = f.c_prev + i.g; h = o.tanh(c).
LstmState lstm_step(const LstmCell& cell, std::span<const double> x,
                    std::span<const double> h_prev,
                    std::span<const double> c_prev);

// Runs fwd over the sequence and bwd over the reversed sequence from zero
// states; output row t is concat(h_fwd[t], h_bwd[t]). Throws
// EmptyInputError for an empty sequence.
Mat blstm_layer_forward(const LstmCell& fwd, const LstmCell& bwd,
                        const Mat& xs);

}  // namespace vf::nn

#endif  // VOICEFORGE_NN_LAYERS_HPP_
