// src/nn/linalg.cpp

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

#include "voiceforge/nn/linalg.hpp"

namespace vf::nn {

void affine(const Mat& w, std::span<const double> x, std::span<const double> b,
            std::span<double> y) {
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const auto row = w.row(r);
    double acc = b.empty() ? 0.0 : b[r];
    for (std::size_t c = 0; c < row.size(); ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

void add_transpose_times(const Mat& w, std::span<const double> dz,
                         std::span<double> dx) {
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const auto row = w.row(r);
    const double g = dz[r];
    for (std::size_t c = 0; c < row.size(); ++c) dx[c] += row[c] * g;
  }
}

void add_outer(Mat& w, std::span<const double> dz, std::span<const double> x) {
  for (std::size_t r = 0; r < w.rows(); ++r) {
    auto row = w.row(r);
    const double g = dz[r];
    for (std::size_t c = 0; c < row.size(); ++c) row[c] += g * x[c];
  }
}

void matmul_nt(const Mat& a, const Mat& b, Mat& c) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto ai = a.row(i);
    auto ci = c.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) ci[j] = dot(ai, b.row(j));
  }
}

void matmul_tn_add(const Mat& a, const Mat& b, Mat& c) {
  for (std::size_t t = 0; t < a.rows(); ++t) {
    const auto at = a.row(t);
    const auto bt = b.row(t);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      auto ci = c.row(i);
      const double v = at[i];
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += v * bt[j];
    }
  }
}

void matmul_nn(const Mat& a, const Mat& b, Mat& c) {
  c.fill(0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto ai = a.row(i);
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double v = ai[k];
      const auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += v * bk[j];
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace vf::nn
