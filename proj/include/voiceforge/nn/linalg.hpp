// include/voiceforge/nn/linalg.hpp

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

#ifndef VOICEFORGE_NN_LINALG_HPP_
#define VOICEFORGE_NN_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace vf::nn {

using Vec = std::vector<double>;

// Dense row-major matrix. Just enough linear algebra for the layers here;
// all loops are written contiguous-inner so the compiler can vectorize.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return a_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  std::span<double> flat() { return {a_.data(), a_.size()}; }
  std::span<const double> flat() const { return {a_.data(), a_.size()}; }

  void fill(double v) { std::fill(a_.begin(), a_.end(), v); }

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// y = W x + b
void affine(const Mat& w, std::span<const double> x, std::span<const double> b,
            std::span<double> y);

// dx += W^T dz
void add_transpose_times(const Mat& w, std::span<const double> dz,
                         std::span<double> dx);

// W += dz x^T
void add_outer(Mat& w, std::span<const double> dz, std::span<const double> x);

// C = A B^T   (A: m x k, B: n x k, C: m x n)
void matmul_nt(const Mat& a, const Mat& b, Mat& c);

// C += A^T B  (A: t x m, B: t x n, C: m x n)
void matmul_tn_add(const Mat& a, const Mat& b, Mat& c);

// C = A B     (A: m x k, B: k x n, C: m x n)
void matmul_nn(const Mat& a, const Mat& b, Mat& c);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace vf::nn

#endif  // VOICEFORGE_NN_LINALG_HPP_
