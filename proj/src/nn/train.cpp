// src/nn/train.cpp

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
#include <numeric>
#include <random>
#include <string>

#include "voiceforge/error.hpp"
#include "voiceforge/nn/train.hpp"

namespace vf::nn {

namespace {

constexpr double kGradCheckStep = 1e-5;

void zero_all(std::vector<std::span<double>>& views) {
  for (auto& v : views) std::fill(v.begin(), v.end(), 0.0);
}

double global_norm(const std::vector<std::span<double>>& views) {
  double sq = 0.0;
  for (const auto& v : views)
    for (double x : v) sq += x * x;
  return std::sqrt(sq);
}

void clip_to(std::vector<std::span<double>>& views, double max_norm) {
  if (max_norm <= 0.0) return;
  const double norm = global_norm(views);
  if (norm <= max_norm) return;
  const double scale = max_norm / norm;
  for (auto& v : views)
    for (double& x : v) x *= scale;
}

// v = momentum * v - lr * g; theta += v
void momentum_step(std::vector<std::span<double>>& params,
                   std::vector<std::span<double>>& grads,
                   std::vector<std::span<double>>& velocity,
                   const OptimizerConfig& opt) {
  for (std::size_t b = 0; b < params.size(); ++b) {
    auto p = params[b];
    auto g = grads[b];
    auto v = velocity[b];
    for (std::size_t i = 0; i < p.size(); ++i) {
      v[i] = opt.momentum * v[i] - opt.learning_rate * g[i];
      p[i] += v[i];
    }
  }
}

template <typename Model, typename LossFn>
double grad_check_impl(Model& net, Model& grads, LossFn&& loss_of) {
  auto params = net.param_views();
  auto analytic = grads.param_views();
  double max_err = 0.0;
  for (std::size_t b = 0; b < params.size(); ++b) {
    auto p = params[b];
    auto ga = analytic[b];
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double orig = p[i];
      p[i] = orig + kGradCheckStep;
      const double lp = loss_of();
      p[i] = orig - kGradCheckStep;
      const double lm = loss_of();
      p[i] = orig;
      const double gn = (lp - lm) / (2.0 * kGradCheckStep);
      const double err = std::abs(ga[i] - gn) /
                         std::max({std::abs(ga[i]), std::abs(gn), 1e-8});
      max_err = std::max(max_err, err);
    }
  }
  return max_err;
}

}  // namespace

double mean_squared_error(const Mat& pred, const Mat& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols())
    throw DimMismatchError("mean_squared_error: shape mismatch");
  double acc = 0.0;
  const auto a = pred.flat();
  const auto b = target.flat();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double e = a[i] - b[i];
    acc += e * e;
  }
  return acc / static_cast<double>(a.size());
}

double frame_cross_entropy(const Mat& probs, const std::vector<int>& labels) {
  if (probs.rows() != labels.size())
    throw DimMismatchError("frame_cross_entropy: label count mismatch");
  double acc = 0.0;
  for (std::size_t t = 0; t < probs.rows(); ++t)
    acc -= std::log(std::max(probs(t, static_cast<std::size_t>(labels[t])),
                             1e-12));
  return acc / static_cast<double>(probs.rows());
}

int argmax_row(std::span<const double> row) {
  int best = 0;
  for (std::size_t j = 1; j < row.size(); ++j)
    if (row[j] > row[best]) best = static_cast<int>(j);
  return best;
}

TrainLog train(DblstmNetwork& net, const std::vector<SequenceExample>& data,
               Loss loss, const OptimizerConfig& opt) {
  if (loss != Loss::mse)
    throw ConfigError("train: sequence regression uses the mse loss");
  if (data.empty()) throw EmptyInputError("train: no sequences");
  for (const auto& ex : data) {
    if (ex.input.cols() != net.input_dim() ||
        ex.target.cols() != net.output_dim() ||
        ex.input.rows() != ex.target.rows())
      throw DimMismatchError("train: example shape does not match network");
  }

  DblstmNetwork grads = net.zeros_like();
  DblstmNetwork velocity = net.zeros_like();
  auto params = net.param_views();
  auto grad_views = grads.param_views();
  auto vel_views = velocity.param_views();

  std::mt19937 rng(opt.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);

  TrainLog log;
  for (int epoch = 0; epoch < opt.epochs; ++epoch) {
    if (opt.shuffle) std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      zero_all(grad_views);
      const double l =
          net.forward_backward(data[order[k]].input, data[order[k]].target,
                               grads);
      if (!std::isfinite(l))
        throw NumericError("train: non-finite loss at epoch " +
                           std::to_string(epoch) + ", sequence " +
                           std::to_string(order[k]));
      epoch_loss += l;
      clip_to(grad_views, opt.grad_clip);
      momentum_step(params, grad_views, vel_views, opt);
    }
    epoch_loss /= static_cast<double>(data.size());
    log.epoch_loss.push_back(epoch_loss);
    if (opt.stop_loss > 0.0 && epoch_loss <= opt.stop_loss) break;
  }
  return log;
}

TrainLog train(DnnClassifier& net, const std::vector<ClassifiedFrames>& data,
               const std::vector<ClassifiedFrames>& val, Loss loss,
               const OptimizerConfig& opt) {
  if (loss != Loss::cross_entropy)
    throw ConfigError("train: classification uses the cross_entropy loss");
  if (data.empty()) throw EmptyInputError("train: no utterances");
  for (const auto& ex : data) {
    if (ex.input.cols() != net.input_dim() ||
        ex.input.rows() != ex.labels.size())
      throw DimMismatchError("train: example shape does not match network");
  }

  DnnClassifier grads = net.zeros_like();
  DnnClassifier velocity = net.zeros_like();
  auto params = net.param_views();
  auto grad_views = grads.param_views();
  auto vel_views = velocity.param_views();

  std::mt19937 rng(opt.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);

  auto val_accuracy = [&]() {
    std::size_t hits = 0, total = 0;
    for (const auto& ex : val) {
      const Mat probs = net.forward(ex.input);
      for (std::size_t t = 0; t < probs.rows(); ++t) {
        hits += argmax_row(probs.row(t)) == ex.labels[t] ? 1 : 0;
        ++total;
      }
    }
    return total == 0 ? 0.0 : static_cast<double>(hits) / total;
  };

  TrainLog log;
  std::vector<double> best_params;
  double best_acc = -1.0;

  for (int epoch = 0; epoch < opt.epochs; ++epoch) {
    if (opt.shuffle) std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      zero_all(grad_views);
      const double l =
          net.forward_backward(data[order[k]].input, data[order[k]].labels,
                               grads);
      if (!std::isfinite(l))
        throw NumericError("train: non-finite loss at epoch " +
                           std::to_string(epoch) + ", utterance " +
                           std::to_string(order[k]));
      epoch_loss += l;
      clip_to(grad_views, opt.grad_clip);
      momentum_step(params, grad_views, vel_views, opt);
    }
    log.epoch_loss.push_back(epoch_loss / static_cast<double>(data.size()));

    if (!val.empty()) {
      const double acc = val_accuracy();
      log.epoch_val_accuracy.push_back(acc);
      if (acc > best_acc) {
        best_acc = acc;
        log.best_epoch = epoch;
        best_params.clear();
        for (const auto& v : params)
          best_params.insert(best_params.end(), v.begin(), v.end());
      }
    }
    if (opt.stop_loss > 0.0 && log.epoch_loss.back() <= opt.stop_loss) break;
  }

  if (!best_params.empty()) {
    std::size_t off = 0;
    for (auto& v : params) {
      std::copy(best_params.begin() + off, best_params.begin() + off + v.size(),
                v.begin());
      off += v.size();
    }
  }
  return log;
}

double grad_check(DblstmNetwork& net, const SequenceExample& sample,
                  Loss loss) {
  if (loss != Loss::mse)
    throw ConfigError("grad_check: sequence regression uses mse");
  DblstmNetwork grads = net.zeros_like();
  net.forward_backward(sample.input, sample.target, grads);
  return grad_check_impl(net, grads, [&]() {
    return mean_squared_error(net.forward(sample.input), sample.target);
  });
}

double grad_check(DnnClassifier& net, const ClassifiedFrames& sample) {
  DnnClassifier grads = net.zeros_like();
  net.forward_backward(sample.input, sample.labels, grads);
  return grad_check_impl(net, grads, [&]() {
    return frame_cross_entropy(net.forward(sample.input), sample.labels);
  });
}

}  // namespace vf::nn
