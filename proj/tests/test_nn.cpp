// tests/test_nn.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "voiceforge/error.hpp"
#include "voiceforge/nn/train.hpp"

using namespace vf::nn;

namespace {

Mat random_mat(std::size_t rows, std::size_t cols, unsigned seed,
               double scale = 1.0) {
  Mat m(rows, cols);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (auto& v : m.flat()) v = dist(rng);
  return m;
}

LstmCell random_cell(std::size_t input, std::size_t hidden, unsigned seed) {
  LstmCell c;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  for (Mat* w : {&c.wi, &c.wf, &c.wo, &c.wg}) {
    *w = Mat(hidden, input + hidden);
    for (auto& v : w->flat()) v = dist(rng);
  }
  for (Vec* b : {&c.bi, &c.bf, &c.bo, &c.bg}) {
    b->resize(hidden);
    for (auto& v : *b) v = dist(rng);
  }
  return c;
}

// Targets are kept at modest amplitude for the finite-difference checks: a
// small loss value keeps central-difference roundoff below the 1e-8
// gradient floor, so the 1e-4 relative bound measures the gradients rather
// than the noise.
SequenceExample random_sequence(std::size_t t, std::size_t in, std::size_t out,
                                unsigned seed, double target_scale = 0.25) {
  return {random_mat(t, in, seed),
          random_mat(t, out, seed + 1000, target_scale)};
}

}  // namespace

TEST_CASE("dense_forward: identity weights pass the input through") {
  DenseLayer layer;
  layer.weight = Mat(4, 4);
  for (std::size_t i = 0; i < 4; ++i) layer.weight(i, i) = 1.0;
  layer.bias.assign(4, 0.0);
  layer.activation = Activation::identity;
  Vec x = {0.5, -1.0, 2.0, 0.0};
  CHECK(dense_forward(layer, x) == x);
}

TEST_CASE("dense_forward: zero weights under sigmoid give 0.5") {
  DenseLayer layer;
  layer.weight = Mat(3, 5);
  layer.bias.assign(3, 0.0);
  layer.activation = Activation::sigmoid;
  Vec x = {1, 2, 3, 4, 5};
  for (double v : dense_forward(layer, x)) CHECK(v == 0.5);
}

TEST_CASE("dense_forward: the 221 -> 2048 hidden shape is accepted") {
  DenseLayer layer;
  layer.weight = Mat(2048, 221);
  layer.bias.assign(2048, 0.0);
  layer.activation = Activation::sigmoid;
  Vec x(221, 0.1);
  CHECK(dense_forward(layer, x).size() == 2048);
}

TEST_CASE("dense_forward: wrong input size throws") {
  DenseLayer layer;
  layer.weight = Mat(2, 3);
  layer.bias.assign(2, 0.0);
  Vec x(4, 0.0);
  CHECK_THROWS_AS(dense_forward(layer, x), vf::DimMismatchError);
}

TEST_CASE("softmax: uniform over 39 zeros") {
  Vec z(39, 0.0);
  Vec p = softmax(z);
  for (double v : p) CHECK(v == doctest::Approx(1.0 / 39.0).epsilon(1e-12));
}

TEST_CASE("softmax: (0, ln 2) maps to (1/3, 2/3)") {
  Vec p = softmax({0.0, std::log(2.0)});
  CHECK(p[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("softmax: shift-invariant, sums to one, entries in (0,1)") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-30.0, 30.0);
  for (int trial = 0; trial < 50; ++trial) {
    Vec z(17);
    for (auto& v : z) v = dist(rng);
    Vec shifted = z;
    for (auto& v : shifted) v += 123.456;
    Vec p = softmax(z);
    Vec q = softmax(shifted);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] == doctest::Approx(q[i]).epsilon(1e-12));
      CHECK(p[i] > 0.0);
      CHECK(p[i] < 1.0);
      sum += p[i];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("lstm_step: all-zero parameters and states give zero outputs") {
  LstmCell c;
  for (Mat* w : {&c.wi, &c.wf, &c.wo, &c.wg}) *w = Mat(3, 5 + 3);
  for (Vec* b : {&c.bi, &c.bf, &c.bo, &c.bg}) b->assign(3, 0.0);
  Vec x = {1.0, -2.0, 0.5, 3.0, -1.0};
  Vec h(3, 0.0), cc(3, 0.0);
  LstmState s = lstm_step(c, x, h, cc);
  for (double v : s.h) CHECK(v == 0.0);
  for (double v : s.c) CHECK(v == 0.0);
}

TEST_CASE("lstm_step: saturated forget gate preserves the cell state") {
  LstmCell c = random_cell(2, 3, 7);
  for (Mat* w : {&c.wi, &c.wf}) w->fill(0.0);
  c.bf.assign(3, 100.0);   // f = 1 exactly at double precision
  c.bi.assign(3, -100.0);  // i = 0 to within 1e-44
  Vec x = {0.3, -0.7};
  Vec h = {0.1, 0.2, -0.3};
  Vec cc = {0.5, -0.25, 0.75};
  LstmState s = lstm_step(c, x, h, cc);
  for (std::size_t j = 0; j < 3; ++j) CHECK(s.c[j] == cc[j]);
}

TEST_CASE("lstm_step: dimension mismatch throws") {
  LstmCell c = random_cell(4, 3, 11);
  Vec x(5, 0.0), h(3, 0.0), cc(3, 0.0);
  CHECK_THROWS_AS(lstm_step(c, x, h, cc), vf::DimMismatchError);
}

TEST_CASE("blstm_layer_forward: length-1 output is two independent steps") {
  LstmCell f = random_cell(4, 3, 21), b = random_cell(4, 3, 22);
  Mat xs = random_mat(1, 4, 23);
  Mat out = blstm_layer_forward(f, b, xs);
  REQUIRE(out.rows() == 1);
  REQUIRE(out.cols() == 6);

  Vec zeros3(3, 0.0);
  LstmState sf = lstm_step(f, xs.row(0), zeros3, zeros3);
  LstmState sb = lstm_step(b, xs.row(0), zeros3, zeros3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(out(0, j) == doctest::Approx(sf.h[j]).epsilon(1e-12));
    CHECK(out(0, 3 + j) == doctest::Approx(sb.h[j]).epsilon(1e-12));
  }
}

TEST_CASE("blstm_layer_forward: reversing the input swaps the halves") {
  LstmCell f = random_cell(3, 4, 31), b = random_cell(3, 4, 32);
  Mat xs = random_mat(6, 3, 33);
  Mat rev(6, 3);
  for (std::size_t t = 0; t < 6; ++t) {
    auto src = xs.row(5 - t);
    std::copy(src.begin(), src.end(), rev.row(t).begin());
  }
  Mat out = blstm_layer_forward(f, b, xs);
  Mat out_rev = blstm_layer_forward(b, f, rev);
  for (std::size_t t = 0; t < 6; ++t)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(out(t, j) == doctest::Approx(out_rev(5 - t, 4 + j)).epsilon(1e-12));
      CHECK(out(t, 4 + j) == doctest::Approx(out_rev(5 - t, j)).epsilon(1e-12));
    }
}

TEST_CASE("blstm_layer_forward: backward context reaches the first frame") {
  LstmCell f = random_cell(2, 3, 41), b = random_cell(2, 3, 42);
  Mat xs = random_mat(3, 2, 43);
  Mat out1 = blstm_layer_forward(f, b, xs);
  xs(2, 0) += 0.5;
  Mat out2 = blstm_layer_forward(f, b, xs);
  double diff = 0.0;
  for (std::size_t j = 0; j < 6; ++j)
    diff = std::max(diff, std::abs(out1(0, j) - out2(0, j)));
  CHECK(diff > 1e-8);
}

TEST_CASE("blstm_layer_forward: empty sequence throws") {
  LstmCell f = random_cell(2, 3, 51), b = random_cell(2, 3, 52);
  Mat xs(0, 2);
  CHECK_THROWS_AS(blstm_layer_forward(f, b, xs), vf::EmptyInputError);
}

TEST_CASE("dblstm: 4x128 accepts 39-dim input and emits 40-dim output") {
  DblstmNetwork net(39, 40, 4, 128, 1);
  Mat xs = random_mat(5, 39, 61, 0.5);
  Mat out = net.forward(xs);
  CHECK(out.rows() == 5);
  CHECK(out.cols() == 40);
}

TEST_CASE("dblstm: 4x512 constructs and runs") {
  DblstmNetwork net(39, 40, 4, 512, 2);
  CHECK(net.hidden_size() == 512);
  Mat xs = random_mat(3, 39, 62, 0.5);
  Mat out = net.forward(xs);
  CHECK(out.rows() == 3);
  CHECK(out.cols() == 40);
}

TEST_CASE("dblstm: all-zero parameters give all-zero output") {
  DblstmNetwork net = DblstmNetwork(5, 4, 2, 6, 3).zeros_like();
  Mat xs = random_mat(7, 5, 63);
  Mat out = net.forward(xs);
  for (double v : out.flat()) CHECK(v == 0.0);
}

TEST_CASE("dblstm: output length equals input length for all lengths") {
  DblstmNetwork net(3, 2, 2, 4, 4);
  for (std::size_t t = 1; t <= 6; ++t) {
    Mat xs = random_mat(t, 3, 100 + static_cast<unsigned>(t));
    CHECK(net.forward(xs).rows() == t);
  }
}

TEST_CASE("dblstm: dimension mismatch and empty input throw") {
  DblstmNetwork net(3, 2, 1, 4, 5);
  CHECK_THROWS_AS(net.forward(random_mat(4, 7, 71)), vf::DimMismatchError);
  CHECK_THROWS_AS(net.forward(Mat(0, 3)), vf::EmptyInputError);
}

TEST_CASE("grad_check: dense + softmax + cross-entropy under 1e-4") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    DnnClassifier net(6, 5, 1, 3, seed);
    ClassifiedFrames sample{random_mat(8, 6, seed + 200), {}};
    std::mt19937 rng(seed + 300);
    std::uniform_int_distribution<int> lab(0, 2);
    for (int t = 0; t < 8; ++t) sample.labels.push_back(lab(rng));
    CHECK(grad_check(net, sample) < 1e-4);
  }
}

TEST_CASE("grad_check: single BLSTM layer + mse under 1e-4") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    DblstmNetwork net(5, 3, 1, 6, seed);
    SequenceExample sample = random_sequence(7, 5, 3, seed + 400);
    CHECK(grad_check(net, sample, Loss::mse) < 1e-4);
  }
}

TEST_CASE("grad_check: two-layer network under 1e-4") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    DblstmNetwork net(4, 3, 2, 5, seed);
    SequenceExample sample = random_sequence(6, 4, 3, seed + 500);
    CHECK(grad_check(net, sample, Loss::mse) < 1e-4);
  }
}

TEST_CASE("grad_check: zero-valued parameters still pass") {
  DblstmNetwork net = DblstmNetwork(3, 2, 1, 4, 9).zeros_like();
  SequenceExample sample = random_sequence(5, 3, 2, 600);
  const double err = grad_check(net, sample, Loss::mse);
  CHECK(std::isfinite(err));
  CHECK(err < 1e-4);
}

TEST_CASE("train: constant pair decreases mse monotonically for 10 epochs") {
  DblstmNetwork net(3, 2, 1, 8, 12);
  SequenceExample ex;
  ex.input = Mat(20, 3);
  ex.target = Mat(20, 2);
  for (auto& v : ex.input.flat()) v = 0.5;
  for (auto& v : ex.target.flat()) v = -0.25;

  OptimizerConfig opt;
  opt.learning_rate = 1e-3;
  opt.epochs = 11;
  opt.shuffle = false;
  TrainLog log = train(net, {ex}, Loss::mse, opt);
  REQUIRE(log.epoch_loss.size() == 11);
  for (std::size_t e = 1; e < 11; ++e)
    CHECK(log.epoch_loss[e] < log.epoch_loss[e - 1]);
}

TEST_CASE("train: zero learning rate leaves parameters unchanged") {
  DblstmNetwork net(3, 2, 1, 4, 13);
  std::vector<double> before;
  for (const auto& v : net.param_views())
    before.insert(before.end(), v.begin(), v.end());

  OptimizerConfig opt;
  opt.learning_rate = 0.0;
  opt.epochs = 3;
  train(net, {random_sequence(6, 3, 2, 700)}, Loss::mse, opt);

  std::vector<double> after;
  for (const auto& v : net.param_views())
    after.insert(after.end(), v.begin(), v.end());
  CHECK(before == after);
}

TEST_CASE("train: tiny classifier solves a separable 2-class problem") {
  // Frames are separable on the first coordinate.
  std::mt19937 rng(14);
  std::uniform_real_distribution<double> dist(0.25, 1.0);
  ClassifiedFrames data;
  data.input = Mat(60, 2);
  for (std::size_t t = 0; t < 60; ++t) {
    const int label = t % 2;
    data.input(t, 0) = label == 0 ? dist(rng) : -dist(rng);
    data.input(t, 1) = dist(rng) - 0.625;
    data.labels.push_back(label);
  }

  DnnClassifier net(2, 8, 1, 2, 15);
  OptimizerConfig opt;
  opt.learning_rate = 0.5;
  opt.epochs = 200;
  opt.stop_loss = 0.005;
  train(net, {data}, {}, Loss::cross_entropy, opt);

  CHECK(frame_cross_entropy(net.forward(data.input), data.labels) < 0.01);
}

TEST_CASE("train: bit-reproducible under a fixed seed") {
  auto run = [&]() {
    DblstmNetwork net(3, 2, 2, 5, 77);
    std::vector<SequenceExample> data;
    for (unsigned k = 0; k < 4; ++k)
      data.push_back(random_sequence(8, 3, 2, 800 + k));
    OptimizerConfig opt;
    opt.learning_rate = 0.01;
    opt.epochs = 5;
    opt.seed = 99;
    TrainLog log = train(net, data, Loss::mse, opt);
    std::vector<double> params;
    for (const auto& v : net.param_views())
      params.insert(params.end(), v.begin(), v.end());
    return std::make_pair(log.epoch_loss, params);
  };
  auto a = run();
  auto b = run();
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("train: non-finite loss aborts with a diagnostic") {
  DblstmNetwork net(2, 1, 1, 3, 16);
  SequenceExample ex = random_sequence(4, 2, 1, 900);
  ex.target(0, 0) = std::numeric_limits<double>::infinity();
  OptimizerConfig opt;
  opt.epochs = 1;
  CHECK_THROWS_AS(train(net, {ex}, Loss::mse, opt), vf::NumericError);
}

TEST_CASE("train: loss/model kind mismatches are rejected") {
  DblstmNetwork net(2, 1, 1, 3, 17);
  CHECK_THROWS_AS(train(net, {random_sequence(4, 2, 1, 901)},
                        Loss::cross_entropy, OptimizerConfig{}),
                  vf::ConfigError);
  DnnClassifier clf(2, 3, 1, 2, 18);
  ClassifiedFrames cf{random_mat(3, 2, 902), {0, 1, 0}};
  CHECK_THROWS_AS(train(clf, {cf}, {}, Loss::mse, OptimizerConfig{}),
                  vf::ConfigError);
}

TEST_CASE("train: empty dataset throws") {
  DblstmNetwork net(2, 1, 1, 3, 19);
  std::vector<SequenceExample> empty;
  CHECK_THROWS_AS(train(net, empty, Loss::mse, OptimizerConfig{}),
                  vf::EmptyInputError);
}
