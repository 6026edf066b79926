// src/nn/network.cpp

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

#include <cmath>
#include <random>
#include <string>

#include "src/nn/cell_ops.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/nn/network.hpp"

namespace vf::nn {

namespace {

constexpr double kForgetBiasInit = 1.0;
constexpr double kProbFloor = 1e-12;

void init_uniform(Mat& w, std::size_t fan_in, std::mt19937& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& v : w.flat()) v = dist(rng);
}

LstmCell make_cell(std::size_t input, std::size_t hidden, std::mt19937& rng) {
  LstmCell cell;
  const std::size_t fan_in = input + hidden;
  for (Mat* w : {&cell.wi, &cell.wf, &cell.wo, &cell.wg}) {
    *w = Mat(hidden, fan_in);
    init_uniform(*w, fan_in, rng);
  }
  cell.bi.assign(hidden, 0.0);
  cell.bf.assign(hidden, kForgetBiasInit);
  cell.bo.assign(hidden, 0.0);
  cell.bg.assign(hidden, 0.0);
  return cell;
}

void zero_params(LstmCell& cell) {
  for (Mat* w : {&cell.wi, &cell.wf, &cell.wo, &cell.wg}) w->fill(0.0);
  for (Vec* b : {&cell.bi, &cell.bf, &cell.bo, &cell.bg})
    std::fill(b->begin(), b->end(), 0.0);
}

template <typename Span, typename Cell>
void push_cell_views(std::vector<Span>& out, Cell& cell) {
  out.push_back(cell.wi.flat());
  out.push_back(cell.wf.flat());
  out.push_back(cell.wo.flat());
  out.push_back(cell.wg.flat());
  out.push_back(Span(cell.bi));
  out.push_back(Span(cell.bf));
  out.push_back(Span(cell.bo));
  out.push_back(Span(cell.bg));
}

}  // namespace

DnnClassifier::DnnClassifier(int input_dim, int hidden_size, int hidden_layers,
                             int num_classes, unsigned seed) {
  if (input_dim < 1 || num_classes < 2 || hidden_layers < 0 ||
      (hidden_layers > 0 && hidden_size < 1))
    throw ConfigError("DnnClassifier: bad architecture");
  std::mt19937 rng(seed);
  std::size_t in = static_cast<std::size_t>(input_dim);
  for (int l = 0; l < hidden_layers; ++l) {
    DenseLayer layer;
    layer.weight = Mat(static_cast<std::size_t>(hidden_size), in);
    init_uniform(layer.weight, in, rng);
    layer.bias.assign(static_cast<std::size_t>(hidden_size), 0.0);
    layer.activation = Activation::sigmoid;
    layers_.push_back(std::move(layer));
    in = static_cast<std::size_t>(hidden_size);
  }
  DenseLayer out;
  out.weight = Mat(static_cast<std::size_t>(num_classes), in);
  init_uniform(out.weight, in, rng);
  out.bias.assign(static_cast<std::size_t>(num_classes), 0.0);
  out.activation = Activation::softmax;
  layers_.push_back(std::move(out));
}

std::size_t DnnClassifier::input_dim() const {
  return layers_.empty() ? 0 : layers_.front().input_dim();
}

std::size_t DnnClassifier::num_classes() const {
  return layers_.empty() ? 0 : layers_.back().output_dim();
}

Mat DnnClassifier::forward(const Mat& frames) const {
  if (layers_.empty()) throw EmptyInputError("DnnClassifier: no layers");
  if (frames.cols() != input_dim())
    throw DimMismatchError("DnnClassifier::forward: input dims " +
                           std::to_string(frames.cols()) + " != " +
                           std::to_string(input_dim()));
  Mat h = frames;
  for (const auto& layer : layers_) {
    Mat z(h.rows(), layer.output_dim());
    matmul_nt(h, layer.weight, z);
    for (std::size_t t = 0; t < z.rows(); ++t) {
      auto row = z.row(t);
      for (std::size_t j = 0; j < row.size(); ++j) row[j] += layer.bias[j];
      activate(layer.activation, row);
    }
    h = std::move(z);
  }
  return h;
}

double DnnClassifier::forward_backward(const Mat& frames,
                                       const std::vector<int>& labels,
                                       DnnClassifier& grads) const {
  const std::size_t t_count = frames.rows();
  if (t_count == 0) throw EmptyInputError("DnnClassifier: empty batch");
  if (labels.size() != t_count)
    throw DimMismatchError("DnnClassifier: " + std::to_string(labels.size()) +
                           " labels for " + std::to_string(t_count) +
                           " frames");
  if (frames.cols() != input_dim())
    throw DimMismatchError("DnnClassifier: input dim mismatch");

  // Forward, keeping every activated layer output.
  std::vector<Mat> acts;
  acts.reserve(layers_.size() + 1);
  acts.push_back(frames);
  for (const auto& layer : layers_) {
    Mat z(t_count, layer.output_dim());
    matmul_nt(acts.back(), layer.weight, z);
    for (std::size_t t = 0; t < t_count; ++t) {
      auto row = z.row(t);
      for (std::size_t j = 0; j < row.size(); ++j) row[j] += layer.bias[j];
      activate(layer.activation, row);
    }
    acts.push_back(std::move(z));
  }

  const Mat& probs = acts.back();
  const std::size_t classes = num_classes();
  double loss = 0.0;
  for (std::size_t t = 0; t < t_count; ++t) {
    const int y = labels[t];
    if (y < 0 || static_cast<std::size_t>(y) >= classes)
      throw DimMismatchError("DnnClassifier: label out of range");
    loss -= std::log(std::max(probs(t, static_cast<std::size_t>(y)),
                              kProbFloor));
  }
  loss /= static_cast<double>(t_count);

  // Softmax + cross-entropy collapse to (p - onehot) / T.
  Mat dz(t_count, classes);
  for (std::size_t t = 0; t < t_count; ++t) {
    auto row = dz.row(t);
    const auto p = probs.row(t);
    for (std::size_t j = 0; j < classes; ++j)
      row[j] = p[j] / static_cast<double>(t_count);
    row[static_cast<std::size_t>(labels[t])] -= 1.0 / static_cast<double>(t_count);
  }

  for (std::size_t l = layers_.size(); l-- > 0;) {
    const auto& layer = layers_[l];
    auto& g = grads.layers_[l];
    matmul_tn_add(dz, acts[l], g.weight);
    for (std::size_t t = 0; t < t_count; ++t) {
      const auto row = dz.row(t);
      for (std::size_t j = 0; j < row.size(); ++j) g.bias[j] += row[j];
    }
    if (l == 0) break;
    Mat dh(t_count, layer.input_dim());
    matmul_nn(dz, layer.weight, dh);
    // Hidden layers are sigmoid: a' = a (1 - a).
    const Mat& a = acts[l];
    for (std::size_t t = 0; t < t_count; ++t) {
      auto dst = dh.row(t);
      const auto av = a.row(t);
      for (std::size_t j = 0; j < dst.size(); ++j)
        dst[j] *= av[j] * (1.0 - av[j]);
    }
    dz = std::move(dh);
  }
  return loss;
}

DnnClassifier DnnClassifier::zeros_like() const {
  DnnClassifier z = *this;
  for (auto& layer : z.layers_) {
    layer.weight.fill(0.0);
    std::fill(layer.bias.begin(), layer.bias.end(), 0.0);
  }
  return z;
}

std::vector<std::span<double>> DnnClassifier::param_views() {
  std::vector<std::span<double>> v;
  for (auto& layer : layers_) {
    v.push_back(layer.weight.flat());
    v.push_back(std::span<double>(layer.bias));
  }
  return v;
}

std::vector<std::span<const double>> DnnClassifier::param_views() const {
  std::vector<std::span<const double>> v;
  for (const auto& layer : layers_) {
    v.push_back(layer.weight.flat());
    v.push_back(std::span<const double>(layer.bias));
  }
  return v;
}

std::size_t DnnClassifier::param_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers_)
    n += layer.weight.size() + layer.bias.size();
  return n;
}

DblstmNetwork::DblstmNetwork(int input_dim, int output_dim, int num_layers,
                             int hidden_size, unsigned seed)
    : input_dim_(static_cast<std::size_t>(input_dim)) {
  if (input_dim < 1 || output_dim < 1 || num_layers < 1 || hidden_size < 1)
    throw ConfigError("DblstmNetwork: bad architecture");
  std::mt19937 rng(seed);
  const std::size_t hidden = static_cast<std::size_t>(hidden_size);
  std::size_t in = input_dim_;
  for (int l = 0; l < num_layers; ++l) {
    BlstmLayer layer;
    layer.fwd = make_cell(in, hidden, rng);
    layer.bwd = make_cell(in, hidden, rng);
    layers_.push_back(std::move(layer));
    in = 2 * hidden;
  }
  output_.weight = Mat(static_cast<std::size_t>(output_dim), in);
  init_uniform(output_.weight, in, rng);
  output_.bias.assign(static_cast<std::size_t>(output_dim), 0.0);
  output_.activation = Activation::identity;
}

Mat DblstmNetwork::forward(const Mat& xs) const {
  if (xs.rows() == 0) throw EmptyInputError("DblstmNetwork: empty sequence");
  if (xs.cols() != input_dim_)
    throw DimMismatchError("DblstmNetwork::forward: input dims " +
                           std::to_string(xs.cols()) + " != " +
                           std::to_string(input_dim_));
  Mat seq = xs;
  for (const auto& layer : layers_) {
    Mat out(seq.rows(), 2 * layer.fwd.hidden());
    detail::run_direction(layer.fwd, seq, false, nullptr, out, 0);
    detail::run_direction(layer.bwd, seq, true, nullptr, out,
                          layer.fwd.hidden());
    seq = std::move(out);
  }
  Mat pred(seq.rows(), output_.output_dim());
  matmul_nt(seq, output_.weight, pred);
  for (std::size_t t = 0; t < pred.rows(); ++t) {
    auto row = pred.row(t);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] += output_.bias[j];
  }
  return pred;
}

double DblstmNetwork::forward_backward(const Mat& xs, const Mat& targets,
                                       DblstmNetwork& grads) const {
  const std::size_t t_count = xs.rows();
  if (t_count == 0) throw EmptyInputError("DblstmNetwork: empty sequence");
  if (xs.cols() != input_dim_)
    throw DimMismatchError("DblstmNetwork: input dim mismatch");
  if (targets.rows() != t_count || targets.cols() != output_dim())
    throw DimMismatchError("DblstmNetwork: target shape mismatch");

  // Forward with caches; inputs[l] feeds layer l, inputs.back() the output
  // layer.
  std::vector<Mat> inputs;
  inputs.reserve(layers_.size() + 1);
  inputs.push_back(xs);
  std::vector<detail::DirectionCache> fwd_cache(layers_.size());
  std::vector<detail::DirectionCache> bwd_cache(layers_.size());
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const auto& layer = layers_[l];
    Mat out(t_count, 2 * layer.fwd.hidden());
    detail::run_direction(layer.fwd, inputs.back(), false, &fwd_cache[l], out,
                          0);
    detail::run_direction(layer.bwd, inputs.back(), true, &bwd_cache[l], out,
                          layer.fwd.hidden());
    inputs.push_back(std::move(out));
  }

  const std::size_t out_dim = output_dim();
  Mat pred(t_count, out_dim);
  matmul_nt(inputs.back(), output_.weight, pred);
  double loss = 0.0;
  const double denom = static_cast<double>(t_count * out_dim);
  Mat d_pred(t_count, out_dim);
  for (std::size_t t = 0; t < t_count; ++t) {
    auto row = pred.row(t);
    auto drow = d_pred.row(t);
    const auto y = targets.row(t);
    for (std::size_t j = 0; j < out_dim; ++j) {
      row[j] += output_.bias[j];
      const double e = row[j] - y[j];
      loss += e * e;
      drow[j] = 2.0 * e / denom;
    }
  }
  loss /= denom;

  matmul_tn_add(d_pred, inputs.back(), grads.output_.weight);
  for (std::size_t t = 0; t < t_count; ++t) {
    const auto drow = d_pred.row(t);
    for (std::size_t j = 0; j < out_dim; ++j)
      grads.output_.bias[j] += drow[j];
  }
  Mat d_seq(t_count, inputs.back().cols());
  matmul_nn(d_pred, output_.weight, d_seq);

  for (std::size_t l = layers_.size(); l-- > 0;) {
    const auto& layer = layers_[l];
    Mat d_in(t_count, inputs[l].cols());
    detail::backward_direction(layer.fwd, inputs[l], false, fwd_cache[l],
                               d_seq, 0, grads.layers_[l].fwd, d_in);
    detail::backward_direction(layer.bwd, inputs[l], true, bwd_cache[l], d_seq,
                               layer.fwd.hidden(), grads.layers_[l].bwd, d_in);
    d_seq = std::move(d_in);
  }
  return loss;
}

DblstmNetwork DblstmNetwork::zeros_like() const {
  DblstmNetwork z = *this;
  for (auto& layer : z.layers_) {
    zero_params(layer.fwd);
    zero_params(layer.bwd);
  }
  z.output_.weight.fill(0.0);
  std::fill(z.output_.bias.begin(), z.output_.bias.end(), 0.0);
  return z;
}

std::vector<std::span<double>> DblstmNetwork::param_views() {
  std::vector<std::span<double>> v;
  for (auto& layer : layers_) {
    push_cell_views<std::span<double>>(v, layer.fwd);
    push_cell_views<std::span<double>>(v, layer.bwd);
  }
  v.push_back(output_.weight.flat());
  v.push_back(std::span<double>(output_.bias));
  return v;
}

std::vector<std::span<const double>> DblstmNetwork::param_views() const {
  std::vector<std::span<const double>> v;
  for (const auto& layer : layers_) {
    push_cell_views<std::span<const double>>(v, layer.fwd);
    push_cell_views<std::span<const double>>(v, layer.bwd);
  }
  v.push_back(output_.weight.flat());
  v.push_back(std::span<const double>(output_.bias));
  return v;
}

std::size_t DblstmNetwork::param_count() const {
  std::size_t n = 0;
  for (const auto& v : param_views()) n += v.size();
  return n;
}

}  // namespace vf::nn
