// src/vocoder/analysis.cpp

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

#include <fstream>
#include <sstream>

#include "voiceforge/error.hpp"
#include "voiceforge/vocoder.hpp"

namespace vf {

AcousticAnalysis analyze(const Waveform& w, const VocoderConfig& config) {
  AcousticAnalysis a;
  a.f0 = estimate_f0(w, config);
  a.ap = estimate_aperiodicity(w, a.f0, config);
  const FeatureMatrix env = spectral_envelope(w, a.f0, config);
  a.mcep = melcep_encode(env, config.alpha, config.mcep_order);
  return a;
}

void save_analysis(const std::string& basename, const AcousticAnalysis& a,
                   const VocoderConfig& config) {
  FeatureMatrix f0_m(a.f0.frames(), 1, a.f0.frame_shift);
  for (std::size_t t = 0; t < a.f0.frames(); ++t)
    f0_m.at(t, 0) = a.f0.values[t];
  save_feature_matrix(basename + ".f0.fmat", f0_m);

  FeatureMatrix ap_m(a.ap.frames, AperiodicityTrack::kBands,
                     a.ap.frame_shift);
  ap_m.data = a.ap.ratios;
  save_feature_matrix(basename + ".ap.fmat", ap_m);

  save_feature_matrix(basename + ".mcep.fmat", a.mcep.coeffs);

  std::ofstream meta(basename + ".meta");
  if (!meta) throw IoError("cannot write " + basename + ".meta");
  meta.precision(17);
  meta << "sample_rate = " << config.sample_rate << "\n";
  meta << "alpha = " << a.mcep.alpha << "\n";
  meta << "mcep_order = " << a.mcep.coeffs.dims << "\n";
  meta << "warp_bins = " << a.mcep.warp_bins << "\n";
  meta << "band_edges =";
  for (double e : kBandEdgesHz) meta << " " << e;
  meta << "\n";
}

AcousticAnalysis load_analysis(const std::string& basename) {
  AcousticAnalysis a;

  const FeatureMatrix f0_m = load_feature_matrix(basename + ".f0.fmat");
  if (f0_m.dims != 1)
    throw CorruptFileError(basename + ".f0.fmat: expected dims 1");
  a.f0.frame_shift = f0_m.frame_shift;
  a.f0.values = f0_m.data;

  const FeatureMatrix ap_m = load_feature_matrix(basename + ".ap.fmat");
  if (ap_m.dims != AperiodicityTrack::kBands)
    throw CorruptFileError(basename + ".ap.fmat: expected dims 5");
  a.ap.frames = ap_m.frames;
  a.ap.frame_shift = ap_m.frame_shift;
  a.ap.ratios = ap_m.data;

  a.mcep.coeffs = load_feature_matrix(basename + ".mcep.fmat");

  std::ifstream meta(basename + ".meta");
  if (!meta) throw FileNotFoundError("cannot open " + basename + ".meta");
  std::string line;
  while (std::getline(meta, line)) {
    std::istringstream ss(line);
    std::string key, eq;
    ss >> key >> eq;
    if (key == "alpha")
      ss >> a.mcep.alpha;
    else if (key == "warp_bins")
      ss >> a.mcep.warp_bins;
  }

  if (a.ap.frames != a.f0.frames() || a.mcep.coeffs.frames != a.f0.frames())
    throw GridMismatchError(basename + ": track frame counts differ");
  return a;
}

}  // namespace vf
