// tests/test_vocoder.cpp

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
#include <numbers>

#include "test_util.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/vocoder.hpp"

using namespace vf;

namespace {

// Interior frames: the 40 ms correlator window lies fully inside the signal.
bool interior(std::size_t t, std::size_t num_samples,
              const VocoderConfig& cfg) {
  const long c = cfg.frame_center(t);
  return c - cfg.f0_window_samples() / 2 >= 0 &&
         c + cfg.f0_window_samples() / 2 <= static_cast<long>(num_samples);
}

F0Track constant_f0(std::size_t frames, double hz) {
  F0Track f0;
  f0.values.assign(frames, hz);
  return f0;
}

double db_of_power(double p) { return 10.0 * std::log10(p); }

}  // namespace

TEST_CASE("estimate_f0: 200 Hz sine locks within 2 Hz on interior frames") {
  VocoderConfig cfg;
  Waveform w = vftest::sine(200.0, 1.0, 16000, 1.0);
  F0Track f0 = estimate_f0(w, cfg);
  REQUIRE(f0.frames() == 196);
  for (std::size_t t = 0; t < f0.frames(); ++t) {
    if (!interior(t, w.samples.size(), cfg)) continue;
    CHECK(f0.values[t] == doctest::Approx(200.0).epsilon(0.01));
    CHECK(std::abs(f0.values[t] - 200.0) <= 2.0);
  }
}

TEST_CASE("estimate_f0: silence is entirely unvoiced") {
  Waveform w;
  w.sample_rate = 16000;
  w.samples.assign(8000, 0.0);
  F0Track f0 = estimate_f0(w);
  for (double v : f0.values) CHECK(v == 0.0);
}

TEST_CASE("estimate_f0: 400 Hz sine locks within 4 Hz") {
  VocoderConfig cfg;
  Waveform w = vftest::sine(400.0, 0.8, 16000, 0.9);
  F0Track f0 = estimate_f0(w, cfg);
  for (std::size_t t = 0; t < f0.frames(); ++t) {
    if (!interior(t, w.samples.size(), cfg)) continue;
    CHECK(std::abs(f0.values[t] - 400.0) <= 4.0);
  }
}

TEST_CASE("estimate_f0: harmonic-rich tone stays on the fundamental") {
  VocoderConfig cfg;
  Waveform w = vftest::harmonic_tone(150.0, 0.8, 16000);
  F0Track f0 = estimate_f0(w, cfg);
  for (std::size_t t = 0; t < f0.frames(); ++t) {
    if (!interior(t, w.samples.size(), cfg)) continue;
    CHECK(std::abs(f0.values[t] - 150.0) <= 3.0);
  }
}

TEST_CASE("estimate_f0: too-short signal throws") {
  Waveform w;
  w.sample_rate = 16000;
  w.samples.assign(100, 0.5);
  CHECK_THROWS_AS(estimate_f0(w), SignalTooShortError);
}

TEST_CASE("estimate_aperiodicity: pure tone reads periodic in its band") {
  VocoderConfig cfg;
  Waveform w = vftest::sine(200.0, 0.6, 16000, 0.8);
  F0Track f0 = estimate_f0(w, cfg);
  AperiodicityTrack ap = estimate_aperiodicity(w, f0, cfg);
  for (std::size_t t = 0; t < ap.frames; ++t) {
    if (!interior(t, w.samples.size(), cfg) || !f0.voiced(t)) continue;
    CHECK(ap.at(t, 0) < 0.2);
  }
}

TEST_CASE("estimate_aperiodicity: white noise reads aperiodic in every band") {
  VocoderConfig cfg;
  Waveform w = vftest::white_noise(0.6, 16000, 77, 0.5);
  F0Track f0 = constant_f0(vocoder_frame_count(w.samples.size(), cfg), 200.0);
  AperiodicityTrack ap = estimate_aperiodicity(w, f0, cfg);
  for (std::size_t t = 0; t < ap.frames; ++t) {
    if (!interior(t, w.samples.size(), cfg)) continue;
    for (int b = 0; b < AperiodicityTrack::kBands; ++b)
      CHECK(ap.at(t, b) > 0.6);
  }
}

TEST_CASE("estimate_aperiodicity: unvoiced frames are exactly 1") {
  VocoderConfig cfg;
  Waveform w = vftest::white_noise(0.3, 16000, 5, 0.3);
  F0Track f0 = constant_f0(vocoder_frame_count(w.samples.size(), cfg), 0.0);
  AperiodicityTrack ap = estimate_aperiodicity(w, f0, cfg);
  for (double r : ap.ratios) CHECK(r == 1.0);
}

TEST_CASE("estimate_aperiodicity: grid mismatch throws") {
  Waveform w = vftest::sine(200.0, 0.3, 16000);
  F0Track bad = constant_f0(10, 200.0);
  CHECK_THROWS_AS(estimate_aperiodicity(w, bad), GridMismatchError);
}

TEST_CASE("spectral_envelope: white noise averages flat within 3 dB") {
  VocoderConfig cfg;
  Waveform w = vftest::white_noise(1.0, 16000, 123, 0.5);
  F0Track f0 = constant_f0(vocoder_frame_count(w.samples.size(), cfg), 0.0);
  FeatureMatrix env = spectral_envelope(w, f0, cfg);
  REQUIRE(env.frames >= 100);

  std::vector<double> avg(env.dims, 0.0);
  for (std::size_t t = 0; t < 100; ++t)
    for (std::size_t k = 0; k < env.dims; ++k) avg[k] += env.at(t, k) / 100.0;

  double mean_db = 0.0;
  for (double v : avg) mean_db += db_of_power(v);
  mean_db /= static_cast<double>(avg.size());
  for (double v : avg) CHECK(std::abs(db_of_power(v) - mean_db) <= 3.0);
}

TEST_CASE("spectral_envelope: tone peaks near its frequency, no deep nulls") {
  VocoderConfig cfg;
  const std::size_t nfft = 1024;
  const double bin_hz = 16000.0 / nfft;

  // Peak location on a pure tone.
  Waveform tone = vftest::sine(200.0, 0.5, 16000, 0.8);
  F0Track f0 = estimate_f0(tone, cfg);
  FeatureMatrix env = spectral_envelope(tone, f0, cfg);
  const std::size_t mid = env.frames / 2;
  std::size_t peak = 0;
  for (std::size_t k = 0; k < env.dims; ++k)
    if (env.at(mid, k) > env.at(mid, peak)) peak = k;
  CHECK(std::abs(peak * bin_hz - 200.0) <= 100.0);

  // Inter-harmonic smoothness on a harmonic stack: the dip between
  // neighbouring harmonics stays within 10 dB of the smaller peak.
  Waveform rich = vftest::harmonic_tone(200.0, 0.5, 16000, 0.85);
  F0Track f0r = estimate_f0(rich, cfg);
  FeatureMatrix env_r = spectral_envelope(rich, f0r, cfg);
  REQUIRE(f0r.voiced(mid));
  auto bin_at = [&](double hz) {
    return static_cast<std::size_t>(hz / bin_hz + 0.5);
  };
  for (int h = 1; h <= 14; ++h) {
    const double pk = std::min(env_r.at(mid, bin_at(200.0 * h)),
                               env_r.at(mid, bin_at(200.0 * (h + 1))));
    const double valley = env_r.at(mid, bin_at(200.0 * h + 100.0));
    CHECK(db_of_power(pk) - db_of_power(valley) < 10.0);
  }
}

TEST_CASE("spectral_envelope: silence sits at the floor") {
  VocoderConfig cfg;
  Waveform w;
  w.sample_rate = 16000;
  w.samples.assign(8000, 0.0);
  F0Track f0 = estimate_f0(w, cfg);
  FeatureMatrix env = spectral_envelope(w, f0, cfg);
  for (double v : env.data) CHECK(v == 1e-10);
}

TEST_CASE("melcep: constant envelope puts everything in c0") {
  const double c = -3.7;
  FeatureMatrix env(2, 513, 0.005);
  for (auto& v : env.data) v = std::exp(c);
  McepTrack m = melcep_encode(env, 0.42, 40);
  CHECK(m.coeffs.dims == 40);
  for (std::size_t t = 0; t < 2; ++t) {
    CHECK(m.coeffs.at(t, 0) ==
          doctest::Approx(c * std::sqrt(513.0)).epsilon(1e-9));
    for (std::size_t d = 1; d < 40; ++d)
      CHECK(std::abs(m.coeffs.at(t, d)) < 1e-9);
  }
}

TEST_CASE("melcep_decode: zero coefficients give a unit envelope") {
  McepTrack m;
  m.coeffs = FeatureMatrix(3, 40, 0.005);
  m.warp_bins = 513;
  FeatureMatrix env = melcep_decode(m, 1024);
  CHECK(env.dims == 513);
  for (double v : env.data) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("melcep_decode: c0-only gives a constant envelope") {
  McepTrack m;
  m.coeffs = FeatureMatrix(1, 40, 0.005);
  m.coeffs.at(0, 0) = 5.0;
  m.warp_bins = 513;
  FeatureMatrix env = melcep_decode(m, 1024);
  const double expected = std::exp(5.0 * std::sqrt(1.0 / 513.0));
  for (double v : env.data) CHECK(v == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("melcep: encode/decode round-trip under 0.5 dB RMS on smooth envelopes") {
  // Smooth random log envelopes built from a handful of low-order cosines.
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  FeatureMatrix env(6, 513, 0.005);
  for (std::size_t t = 0; t < env.frames; ++t) {
    std::vector<double> coef(8);
    for (auto& a : coef) a = amp(rng);
    for (std::size_t k = 0; k < env.dims; ++k) {
      const double x = static_cast<double>(k) / (env.dims - 1);
      double log_e = -2.0;
      for (std::size_t j = 0; j < coef.size(); ++j)
        log_e += coef[j] * std::cos(std::numbers::pi * x * static_cast<double>(j));
      env.at(t, k) = std::exp(log_e);
    }
  }

  McepTrack m = melcep_encode(env, 0.42, 40);
  FeatureMatrix rec = melcep_decode(m, 1024);
  REQUIRE(rec.dims == env.dims);

  double sq = 0.0;
  for (std::size_t i = 0; i < env.data.size(); ++i) {
    const double diff_db = db_of_power(rec.data[i]) - db_of_power(env.data[i]);
    sq += diff_db * diff_db;
  }
  const double rms_db = std::sqrt(sq / static_cast<double>(env.data.size()));
  CHECK(rms_db < 0.5);
}

TEST_CASE("melcep: round-trip on real analysis envelopes") {
  VocoderConfig cfg;
  Waveform w = vftest::harmonic_tone(220.0, 0.4, 16000);
  F0Track f0 = estimate_f0(w, cfg);
  FeatureMatrix env = spectral_envelope(w, f0, cfg);
  McepTrack m = melcep_encode(env, cfg.alpha, cfg.mcep_order);
  FeatureMatrix rec = melcep_decode(m, cfg.nfft);

  double sq = 0.0;
  for (std::size_t i = 0; i < env.data.size(); ++i) {
    const double d = db_of_power(rec.data[i]) - db_of_power(env.data[i]);
    sq += d * d;
  }
  CHECK(std::sqrt(sq / static_cast<double>(env.data.size())) < 0.5);
}

TEST_CASE("melcep_encode: rejects non-positive envelopes") {
  FeatureMatrix env(1, 513, 0.005);
  CHECK_THROWS_AS(melcep_encode(env, 0.42, 40), NumericError);
}

TEST_CASE("warp_frequency: inverse map round-trips") {
  for (int i = 0; i <= 20; ++i) {
    const double omega = std::numbers::pi * i / 20.0;
    const double back = warp_frequency(warp_frequency(omega, 0.42), -0.42);
    CHECK(back == doctest::Approx(omega).epsilon(1e-10));
  }
}

TEST_CASE("analyze: tracks share the frame grid") {
  Waveform w = vftest::harmonic_tone(180.0, 0.5, 16000);
  AcousticAnalysis a = analyze(w);
  CHECK(a.f0.frames() == a.ap.frames);
  CHECK(a.f0.frames() == a.mcep.coeffs.frames);
  CHECK(a.f0.frame_shift == a.ap.frame_shift);
  CHECK(a.f0.frame_shift == a.mcep.coeffs.frame_shift);
}

TEST_CASE("synthesize: analysis of a vowel-like tone resynthesizes on pitch") {
  VocoderConfig cfg;
  Waveform w = vftest::harmonic_tone(200.0, 0.8, 16000);
  AcousticAnalysis a = analyze(w, cfg);
  Waveform y = synthesize(a, 16000, cfg);

  CHECK(std::abs(static_cast<double>(y.samples.size()) -
                 static_cast<double>(w.samples.size())) <= 80.0);
  for (double s : y.samples) {
    CHECK(std::isfinite(s));
    CHECK(std::abs(s) <= 0.9 + 1e-12);
  }

  F0Track f0_again = estimate_f0(y, cfg);
  for (std::size_t t = 0; t < f0_again.frames(); ++t) {
    if (!interior(t, y.samples.size(), cfg)) continue;
    if (!a.f0.voiced(t)) continue;
    CHECK(f0_again.voiced(t));
    CHECK(std::abs(f0_again.values[t] - 200.0) / 200.0 <= 0.03);
  }
}

TEST_CASE("synthesize: f0 fidelity across the 100-400 Hz range") {
  VocoderConfig cfg;
  for (double hz : {100.0, 200.0, 400.0}) {
    Waveform w = vftest::harmonic_tone(hz, 0.6, 16000);
    AcousticAnalysis a = analyze(w, cfg);
    Waveform y = synthesize(a, 16000, cfg);
    F0Track f0 = estimate_f0(y, cfg);
    for (std::size_t t = 0; t < f0.frames(); ++t) {
      if (!interior(t, y.samples.size(), cfg) || !a.f0.voiced(t)) continue;
      CHECK(std::abs(f0.values[t] - hz) / hz <= 0.03);
    }
  }
}

TEST_CASE("synthesize: all-unvoiced flat analysis comes out as noise") {
  VocoderConfig cfg;
  const std::size_t frames = 120;
  AcousticAnalysis a;
  a.f0.values.assign(frames, 0.0);
  a.ap.frames = frames;
  a.ap.ratios.assign(frames * AperiodicityTrack::kBands, 1.0);
  a.mcep.coeffs = FeatureMatrix(frames, 40, 0.005);
  a.mcep.warp_bins = 513;

  Waveform y = synthesize(a, 16000, cfg);
  F0Track f0 = estimate_f0(y, cfg);
  std::size_t voiced = 0;
  for (std::size_t t = 0; t < f0.frames(); ++t)
    if (f0.voiced(t)) ++voiced;
  CHECK(voiced == 0);
}

TEST_CASE("synthesize: empty analysis throws") {
  AcousticAnalysis a;
  CHECK_THROWS_AS(synthesize(a, 16000), EmptyInputError);
}

TEST_CASE("synthesize: mismatched grids throw") {
  AcousticAnalysis a;
  a.f0.values.assign(50, 100.0);
  a.ap.frames = 40;
  a.ap.ratios.assign(40 * AperiodicityTrack::kBands, 1.0);
  a.mcep.coeffs = FeatureMatrix(50, 40, 0.005);
  CHECK_THROWS_AS(synthesize(a, 16000), GridMismatchError);
}

TEST_CASE("analysis files: save/load round-trip") {
  vftest::TempDir dir("vf_voc");
  Waveform w = vftest::harmonic_tone(240.0, 0.4, 16000);
  AcousticAnalysis a = analyze(w);
  save_analysis(dir.file("utt"), a);
  AcousticAnalysis b = load_analysis(dir.file("utt"));

  CHECK(b.f0.frames() == a.f0.frames());
  CHECK(b.ap.frames == a.ap.frames);
  CHECK(b.mcep.coeffs.frames == a.mcep.coeffs.frames);
  CHECK(b.mcep.alpha == a.mcep.alpha);
  CHECK(b.mcep.warp_bins == a.mcep.warp_bins);
  for (std::size_t t = 0; t < a.f0.frames(); ++t)
    CHECK(b.f0.values[t] ==
          static_cast<double>(static_cast<float>(a.f0.values[t])));
}
