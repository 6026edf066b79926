// src/common/fft.cpp

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

#include "voiceforge/fft.hpp"

#include <numbers>
#include <stdexcept>

#include "voiceforge/error.hpp"

namespace vf {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0) return;
  if ((n & (n - 1)) != 0)
    throw ConfigError("fft size must be a power of two, got " +
                      std::to_string(n));

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1 : -1);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

std::vector<std::complex<double>> rfft(const std::vector<double>& x,
                                       std::size_t nfft) {
  std::vector<std::complex<double>> a(nfft, {0.0, 0.0});
  const std::size_t m = std::min(x.size(), nfft);
  for (std::size_t i = 0; i < m; ++i) a[i] = {x[i], 0.0};
  fft(a);
  a.resize(nfft / 2 + 1);
  return a;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& bins,
                          std::size_t nfft) {
  if (bins.size() != nfft / 2 + 1)
    throw DimMismatchError("irfft expects nfft/2+1 bins");
  std::vector<std::complex<double>> a(nfft);
  for (std::size_t k = 0; k < bins.size(); ++k) a[k] = bins[k];
  for (std::size_t k = 1; k + 1 < bins.size(); ++k)
    a[nfft - k] = std::conj(bins[k]);
  fft(a, /*inverse=*/true);
  std::vector<double> out(nfft);
  for (std::size_t i = 0; i < nfft; ++i) out[i] = a[i].real();
  return out;
}

}  // namespace vf
