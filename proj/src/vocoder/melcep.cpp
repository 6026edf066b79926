// src/vocoder/melcep.cpp

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
#include <numbers>

#include "voiceforge/error.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

double warp_frequency(double omega, double alpha) {
  return omega + 2.0 * std::atan(alpha * std::sin(omega) /
                                 (1.0 - alpha * std::cos(omega)));
}

McepTrack melcep_encode(const FeatureMatrix& envelope, double alpha,
                        int order) {
  if (envelope.dims < 2)
    throw DimMismatchError("melcep_encode: envelope needs at least 2 bins");
  if (order < 1 || static_cast<std::size_t>(order) > envelope.dims)
    throw ConfigError("melcep_encode: bad order " + std::to_string(order));
  for (double v : envelope.data)
    if (!(v > 0.0))
      throw NumericError("melcep_encode: envelope must be strictly positive");

  const std::size_t grid = envelope.dims;  // warped grid size == input bins

  // Source positions: the uniform warped grid pulled back through the
  // inverse warp, expressed in fractional envelope bins.
  std::vector<double> src_pos(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const double warped = (j + 0.5) * std::numbers::pi / grid;
    const double omega = warp_frequency(warped, -alpha);
    src_pos[j] = omega / std::numbers::pi * (grid - 1);
  }

  // DCT-II rows for the kept coefficients.
  std::vector<double> dct(static_cast<std::size_t>(order) * grid);
  for (int m = 0; m < order; ++m) {
    const double scale =
        m == 0 ? std::sqrt(1.0 / grid) : std::sqrt(2.0 / grid);
    for (std::size_t j = 0; j < grid; ++j)
      dct[m * grid + j] =
          scale * std::cos(m * (j + 0.5) * std::numbers::pi / grid);
  }

  McepTrack track;
  track.alpha = alpha;
  track.warp_bins = grid;
  track.coeffs =
      FeatureMatrix(envelope.frames, static_cast<std::size_t>(order),
                    envelope.frame_shift);

  std::vector<double> warped_log(grid);
  for (std::size_t t = 0; t < envelope.frames; ++t) {
    const auto row = envelope.row(t);
    for (std::size_t j = 0; j < grid; ++j) {
      const double p = src_pos[j];
      const std::size_t k0 =
          std::min(static_cast<std::size_t>(p), grid - 2);
      const double frac = p - static_cast<double>(k0);
      const double v = std::log(row[k0]) * (1.0 - frac) +
                       std::log(row[k0 + 1]) * frac;
      warped_log[j] = v;
    }
    for (int m = 0; m < order; ++m) {
      double c = 0.0;
      for (std::size_t j = 0; j < grid; ++j)
        c += dct[m * grid + j] * warped_log[j];
      track.coeffs.at(t, static_cast<std::size_t>(m)) = c;
    }
  }
  return track;
}

FeatureMatrix melcep_decode(const McepTrack& mcep, int nfft) {
  if (mcep.coeffs.dims == 0)
    throw DimMismatchError("melcep_decode: empty coefficient track");
  if (nfft < 4) throw ConfigError("melcep_decode: bad nfft");

  const std::size_t bins = static_cast<std::size_t>(nfft) / 2 + 1;
  const std::size_t order = mcep.coeffs.dims;
  const double grid = static_cast<double>(mcep.warp_bins);

  // Basis functions cos(m * warped(omega)) with the encoder's DCT scaling.
  std::vector<double> basis(bins * order);
  for (std::size_t k = 0; k < bins; ++k) {
    const double omega =
        static_cast<double>(k) * std::numbers::pi / (bins - 1);
    const double warped = warp_frequency(omega, mcep.alpha);
    for (std::size_t m = 0; m < order; ++m) {
      const double scale =
          m == 0 ? std::sqrt(1.0 / grid) : std::sqrt(2.0 / grid);
      basis[k * order + m] = scale * std::cos(static_cast<double>(m) * warped);
    }
  }

  FeatureMatrix env(mcep.coeffs.frames, bins, mcep.coeffs.frame_shift);
  for (std::size_t t = 0; t < mcep.coeffs.frames; ++t) {
    const auto c = mcep.coeffs.row(t);
    for (std::size_t k = 0; k < bins; ++k) {
      double log_e = 0.0;
      for (std::size_t m = 0; m < order; ++m)
        log_e += basis[k * order + m] * c[m];
      env.at(t, k) = std::exp(log_e);
    }
  }
  return env;
}

}  // namespace vf
