// src/nn/cell_ops.hpp

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

// Shared LSTM direction runner with the per-step caches backpropagation
// through time needs.

#ifndef VOICEFORGE_SRC_NN_CELL_OPS_HPP_
#define VOICEFORGE_SRC_NN_CELL_OPS_HPP_

#include <cstddef>

#include "voiceforge/nn/layers.hpp"

namespace vf::nn::detail {

// Per-step activations kept in processing order (step s, not time t); the
// backward pass walks s in reverse regardless of direction.
struct DirectionCache {
  Mat i, f, o, g, c, tanh_c, h;

  void resize(std::size_t steps, std::size_t hidden) {
    i = Mat(steps, hidden);
    f = Mat(steps, hidden);
    o = Mat(steps, hidden);
    g = Mat(steps, hidden);
    c = Mat(steps, hidden);
    tanh_c = Mat(steps, hidden);
    h = Mat(steps, hidden);
  }
};

// Runs one direction over xs (time order). Output h_t lands in columns
// [col_offset, col_offset + hidden) of row t of `out`. When `reverse`, step
// s processes time T-1-s. Pass cache=nullptr for inference.
void run_direction(const LstmCell& cell, const Mat& xs, bool reverse,
                   DirectionCache* cache, Mat& out, std::size_t col_offset);

// Backward through one direction. d_out carries dL/dh in time order within
// the same column window; gradients accumulate into `grads` (same shapes as
// the cell) and dL/dx accumulates into d_xs.
void backward_direction(const LstmCell& cell, const Mat& xs, bool reverse,
                        const DirectionCache& cache, const Mat& d_out,
                        std::size_t col_offset, LstmCell& grads, Mat& d_xs);

}  // namespace vf::nn::detail

#endif  // VOICEFORGE_SRC_NN_CELL_OPS_HPP_
