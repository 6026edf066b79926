// tests/test_util.hpp

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

// Shared test helpers: scratch directories, signal generators, and the
// independent oracles (naive DFT, two-pass statistics) the unit tests check
// the implementation against. Nothing here calls back into the code paths
// under test.

#ifndef VOICEFORGE_TESTS_TEST_UTIL_HPP_
#define VOICEFORGE_TESTS_TEST_UTIL_HPP_

#include <unistd.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "voiceforge/audio.hpp"

namespace vftest {

// Creates a unique scratch directory and removes it on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix) {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / (prefix + ".XXXXXX"))
            .string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
    path_ = buf.data();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (std::filesystem::path(path_) / name).string();
  }

 private:
  std::string path_;
};

inline vf::Waveform sine(double freq, double seconds, int rate,
                         double amplitude = 1.0, double phase = 0.0) {
  vf::Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(seconds * rate);
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    w.samples[i] =
        amplitude * std::sin(2.0 * std::numbers::pi * freq * i / rate + phase);
  return w;
}

inline vf::Waveform white_noise(double seconds, int rate, unsigned seed,
                                double amplitude = 0.5) {
  vf::Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(seconds * rate);
  w.samples.resize(n);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  for (auto& s : w.samples) s = dist(rng);
  return w;
}

// Equal-phase harmonic stack with per-harmonic amplitude rolloff; a crude
// vowel-like periodic signal.
inline vf::Waveform harmonic_tone(double f0, double seconds, int rate,
                                  double rolloff = 0.7,
                                  double amplitude = 0.5) {
  vf::Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(seconds * rate);
  w.samples.resize(n, 0.0);
  double a = 1.0, norm = 0.0;
  for (int m = 1; m * f0 < rate / 2.0 * 0.95; ++m) {
    for (std::size_t i = 0; i < n; ++i)
      w.samples[i] += a * std::sin(2.0 * std::numbers::pi * m * f0 * i / rate);
    norm += a;
    a *= rolloff;
  }
  for (auto& s : w.samples) s *= amplitude / norm;
  return w;
}

// O(n^2) reference DFT.
inline std::vector<std::complex<double>> naive_dft(
    const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                         static_cast<double>(i) / static_cast<double>(n);
      acc += x[i] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
};

// Textbook two-pass population statistics.
inline MeanStd two_pass_mean_std(const std::vector<double>& xs) {
  MeanStd r;
  for (double x : xs) r.mean += x;
  r.mean /= static_cast<double>(xs.size());
  double acc = 0.0;
  for (double x : xs) acc += (x - r.mean) * (x - r.mean);
  r.stddev = std::sqrt(acc / static_cast<double>(xs.size()));
  return r;
}

}  // namespace vftest

#endif  // VOICEFORGE_TESTS_TEST_UTIL_HPP_
