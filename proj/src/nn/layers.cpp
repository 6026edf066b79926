// src/nn/layers.cpp

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

#include "src/nn/cell_ops.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/nn/layers.hpp"

namespace vf::nn {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

void softmax_inplace(std::span<double> z) {
  if (z.empty()) return;
  const double m = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (auto& v : z) {
    v = std::exp(v - m);
    sum += v;
  }
  for (auto& v : z) v /= sum;
}

Vec softmax(Vec z) {
  softmax_inplace(z);
  return z;
}

void activate(Activation act, std::span<double> z) {
  switch (act) {
    case Activation::identity:
      break;
    case Activation::sigmoid:
      for (auto& v : z) v = sigmoid(v);
      break;
    case Activation::tanh:
      for (auto& v : z) v = std::tanh(v);
      break;
    case Activation::relu:
      for (auto& v : z) v = std::max(0.0, v);
      break;
    case Activation::softmax:
      softmax_inplace(z);
      break;
  }
}

Vec dense_forward(const DenseLayer& layer, std::span<const double> x) {
  if (x.size() != layer.input_dim())
    throw DimMismatchError("dense_forward: input size " +
                           std::to_string(x.size()) + " != layer input " +
                           std::to_string(layer.input_dim()));
  Vec y(layer.output_dim());
  affine(layer.weight, x, layer.bias, y);
  activate(layer.activation, y);
  return y;
}

LstmState lstm_step(const LstmCell& cell, std::span<const double> x,
                    std::span<const double> h_prev,
                    std::span<const double> c_prev) {
  const std::size_t hidden = cell.hidden();
  const std::size_t input = cell.input_dim();
  if (x.size() != input || h_prev.size() != hidden || c_prev.size() != hidden)
    throw DimMismatchError("lstm_step: state/input sizes do not match cell");

  Vec u(input + hidden);
  std::copy(x.begin(), x.end(), u.begin());
  std::copy(h_prev.begin(), h_prev.end(), u.begin() + input);

  LstmState s;
  s.h.resize(hidden);
  s.c.resize(hidden);
  Vec zi(hidden), zf(hidden), zo(hidden), zg(hidden);
  affine(cell.wi, u, cell.bi, zi);
  affine(cell.wf, u, cell.bf, zf);
  affine(cell.wo, u, cell.bo, zo);
  affine(cell.wg, u, cell.bg, zg);
  for (std::size_t j = 0; j < hidden; ++j) {
    const double i = sigmoid(zi[j]);
    const double f = sigmoid(zf[j]);
    const double o = sigmoid(zo[j]);
    const double g = std::tanh(zg[j]);
    s.c[j] = f * c_prev[j] + i * g;
    s.h[j] = o * std::tanh(s.c[j]);
  }
  return s;
}

Mat blstm_layer_forward(const LstmCell& fwd, const LstmCell& bwd,
                        const Mat& xs) {
  if (xs.rows() == 0) throw EmptyInputError("blstm_layer_forward: empty sequence");
  if (xs.cols() != fwd.input_dim() || xs.cols() != bwd.input_dim())
    throw DimMismatchError("blstm_layer_forward: input dim " +
                           std::to_string(xs.cols()) + " does not match cells");
  if (fwd.hidden() != bwd.hidden())
    throw DimMismatchError("blstm_layer_forward: directions disagree on size");

  Mat out(xs.rows(), 2 * fwd.hidden());
  detail::run_direction(fwd, xs, /*reverse=*/false, nullptr, out, 0);
  detail::run_direction(bwd, xs, /*reverse=*/true, nullptr, out, fwd.hidden());
  return out;
}

namespace detail {

void run_direction(const LstmCell& cell, const Mat& xs, bool reverse,
                   DirectionCache* cache, Mat& out, std::size_t col_offset) {
  const std::size_t steps = xs.rows();
  const std::size_t hidden = cell.hidden();
  const std::size_t input = cell.input_dim();
  if (cache) cache->resize(steps, hidden);

  Vec h(hidden, 0.0), c(hidden, 0.0);
  Vec u(input + hidden), zi(hidden), zf(hidden), zo(hidden), zg(hidden);

  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t t = reverse ? steps - 1 - s : s;
    const auto x = xs.row(t);
    std::copy(x.begin(), x.end(), u.begin());
    std::copy(h.begin(), h.end(), u.begin() + input);

    affine(cell.wi, u, cell.bi, zi);
    affine(cell.wf, u, cell.bf, zf);
    affine(cell.wo, u, cell.bo, zo);
    affine(cell.wg, u, cell.bg, zg);

    for (std::size_t j = 0; j < hidden; ++j) {
      const double i = sigmoid(zi[j]);
      const double f = sigmoid(zf[j]);
      const double o = sigmoid(zo[j]);
      const double g = std::tanh(zg[j]);
      c[j] = f * c[j] + i * g;
      const double tc = std::tanh(c[j]);
      h[j] = o * tc;
      if (cache) {
        cache->i(s, j) = i;
        cache->f(s, j) = f;
        cache->o(s, j) = o;
        cache->g(s, j) = g;
        cache->c(s, j) = c[j];
        cache->tanh_c(s, j) = tc;
        cache->h(s, j) = h[j];
      }
    }
    auto dst = out.row(t);
    std::copy(h.begin(), h.end(), dst.begin() + col_offset);
  }
}

void backward_direction(const LstmCell& cell, const Mat& xs, bool reverse,
                        const DirectionCache& cache, const Mat& d_out,
                        std::size_t col_offset, LstmCell& grads, Mat& d_xs) {
  const std::size_t steps = xs.rows();
  const std::size_t hidden = cell.hidden();
  const std::size_t input = cell.input_dim();

  Vec dh_rec(hidden, 0.0), dc_rec(hidden, 0.0);
  Vec u(input + hidden), du(input + hidden);
  Vec dzi(hidden), dzf(hidden), dzo(hidden), dzg(hidden);
  const Vec zeros(hidden, 0.0);

  for (std::size_t s = steps; s-- > 0;) {
    const std::size_t t = reverse ? steps - 1 - s : s;
    const auto x = xs.row(t);
    const auto h_prev = s > 0 ? cache.h.row(s - 1) : std::span<const double>(zeros);
    const auto c_prev = s > 0 ? cache.c.row(s - 1) : std::span<const double>(zeros);

    std::copy(x.begin(), x.end(), u.begin());
    std::copy(h_prev.begin(), h_prev.end(), u.begin() + input);

    const auto grad_row = d_out.row(t);
    for (std::size_t j = 0; j < hidden; ++j) {
      const double i = cache.i(s, j);
      const double f = cache.f(s, j);
      const double o = cache.o(s, j);
      const double g = cache.g(s, j);
      const double tc = cache.tanh_c(s, j);

      const double dh = grad_row[col_offset + j] + dh_rec[j];
      const double dc = dc_rec[j] + dh * o * (1.0 - tc * tc);
      const double do_ = dh * tc;
      const double di = dc * g;
      const double dg = dc * i;
      const double df = dc * c_prev[j];
      dc_rec[j] = dc * f;

      dzi[j] = di * i * (1.0 - i);
      dzf[j] = df * f * (1.0 - f);
      dzo[j] = do_ * o * (1.0 - o);
      dzg[j] = dg * (1.0 - g * g);
    }

    add_outer(grads.wi, dzi, u);
    add_outer(grads.wf, dzf, u);
    add_outer(grads.wo, dzo, u);
    add_outer(grads.wg, dzg, u);
    for (std::size_t j = 0; j < hidden; ++j) {
      grads.bi[j] += dzi[j];
      grads.bf[j] += dzf[j];
      grads.bo[j] += dzo[j];
      grads.bg[j] += dzg[j];
    }

    std::fill(du.begin(), du.end(), 0.0);
    add_transpose_times(cell.wi, dzi, du);
    add_transpose_times(cell.wf, dzf, du);
    add_transpose_times(cell.wo, dzo, du);
    add_transpose_times(cell.wg, dzg, du);

    auto dx = d_xs.row(t);
    for (std::size_t k = 0; k < input; ++k) dx[k] += du[k];
    for (std::size_t j = 0; j < hidden; ++j) dh_rec[j] = du[input + j];
  }
}

}  // namespace detail

}  // namespace vf::nn
