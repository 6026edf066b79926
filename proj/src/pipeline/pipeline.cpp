// src/pipeline/pipeline.cpp

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

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "voiceforge/error.hpp"
#include "voiceforge/parallel.hpp"
#include "voiceforge/pipeline.hpp"

namespace vf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

nn::Mat to_mat(const FeatureMatrix& m) {
  nn::Mat out(m.frames, m.dims);
  std::copy(m.data.begin(), m.data.end(), out.flat().begin());
  return out;
}

void check_tolerance(std::size_t a, std::size_t b, int tolerance,
                     const std::string& what) {
  const long diff = static_cast<long>(a) - static_cast<long>(b);
  if (std::labs(diff) > tolerance)
    throw GridMismatchError(what + ": posterior grid has " +
                            std::to_string(a) + " frames, vocoder grid " +
                            std::to_string(b) + " (tolerance " +
                            std::to_string(tolerance) + ")");
}

// Moving average over time, applied per dimension. Half-width in frames.
void smooth_over_time(FeatureMatrix& m, int half) {
  if (half <= 0 || m.frames < 2) return;
  FeatureMatrix src = m;
  for (std::size_t t = 0; t < m.frames; ++t) {
    const long lo = std::max(0L, static_cast<long>(t) - half);
    const long hi = std::min(static_cast<long>(m.frames) - 1,
                             static_cast<long>(t) + half);
    for (std::size_t d = 0; d < m.dims; ++d) {
      double acc = 0.0;
      for (long k = lo; k <= hi; ++k)
        acc += src.at(static_cast<std::size_t>(k), d);
      m.at(t, d) = acc / static_cast<double>(hi - lo + 1);
    }
  }
}

}  // namespace

PairSet build_training_pairs(const ModelArchive& asr_model,
                             const DatasetManifest& manifest,
                             const PipelineConfig& config,
                             int frame_tolerance) {
  if (manifest.entries.empty())
    throw EmptyInputError("build_training_pairs: empty manifest");

  const FrontendConfig frontend = config.frontend();
  const VocoderConfig voc = config.vocoder_config();

  PairSet set;
  set.pairs.resize(manifest.size());
  parallel_for(manifest.size(), [&](std::size_t i) {
    const Waveform w =
        resample(read_wav(manifest.entries[i].audio_path), config.sample_rate);

    FeatureMatrix post = posteriorgram(asr_model, w, frontend);

    const F0Track f0 = estimate_f0(w, voc);
    const FeatureMatrix env = spectral_envelope(w, f0, voc);
    McepTrack mcep = melcep_encode(env, voc.alpha, voc.mcep_order);

    check_tolerance(post.frames, mcep.coeffs.frames, frame_tolerance,
                    manifest.entries[i].audio_path);
    const std::size_t n = std::min(post.frames, mcep.coeffs.frames);
    post.truncate(n);
    mcep.coeffs.truncate(n);
    set.pairs[i] = {std::move(post), std::move(mcep)};
  });

  std::vector<FeatureMatrix> targets;
  targets.reserve(set.pairs.size());
  for (const auto& p : set.pairs) targets.push_back(p.mcep.coeffs);
  set.target_stats = mvn_fit(targets);
  return set;
}

ModelArchive train_conversion_model(const PairSet& set, int num_layers,
                                    int hidden_size,
                                    const nn::OptimizerConfig& opt,
                                    nn::TrainLog* log) {
  if (set.pairs.empty())
    throw EmptyInputError("train_conversion_model: no training pairs");

  const std::size_t input_dim = set.pairs.front().posteriors.dims;
  const std::size_t output_dim = set.pairs.front().mcep.coeffs.dims;

  std::vector<nn::SequenceExample> data;
  data.reserve(set.pairs.size());
  for (const auto& p : set.pairs) {
    if (p.posteriors.dims != input_dim || p.mcep.coeffs.dims != output_dim)
      throw DimMismatchError("train_conversion_model: inconsistent pair dims");
    data.push_back({to_mat(p.posteriors),
                    to_mat(mvn_apply(p.mcep.coeffs, set.target_stats))});
  }

  nn::DblstmNetwork net(static_cast<int>(input_dim),
                        static_cast<int>(output_dim), num_layers, hidden_size,
                        opt.seed);
  nn::TrainLog local = nn::train(net, data, nn::Loss::mse, opt);
  if (log) *log = local;

  return to_archive(net, set.target_stats);
}

Waveform convert(const ConversionJob& job, const PipelineConfig& config,
                 ConversionReport* report) {
  const auto t_total = Clock::now();
  ConversionReport local;

  if (job.vc_model.kind != ModelArchive::Kind::dblstm)
    throw ArchitectureMismatchError("convert: vc model is not a dblstm");
  if (job.asr_model.output_dim != job.vc_model.input_dim)
    throw ArchitectureMismatchError(
        "convert: recognizer emits " + std::to_string(job.asr_model.output_dim) +
        " classes but the conversion model expects " +
        std::to_string(job.vc_model.input_dim));

  const Waveform w = resample(job.source, config.sample_rate);
  const VocoderConfig voc = config.vocoder_config();

  // Stage 1: singer-independent content.
  auto t0 = Clock::now();
  FeatureMatrix post = posteriorgram(job.asr_model, w, config.frontend());
  local.posterior_ms = ms_since(t0);
  local.posterior_frames = post.frames;

  // Source excitation, kept unchanged through synthesis.
  t0 = Clock::now();
  F0Track f0 = estimate_f0(w, voc);
  AperiodicityTrack ap = estimate_aperiodicity(w, f0, voc);
  local.analysis_ms = ms_since(t0);
  local.vocoder_frames = f0.frames();
  local.f0_extracted = f0;
  local.ap_extracted = ap;

  check_tolerance(post.frames, f0.frames(), 2, "convert");
  const std::size_t n = std::min(post.frames, f0.frames());
  post.truncate(n);
  f0.values.resize(n);
  ap.ratios.resize(n * AperiodicityTrack::kBands);
  ap.frames = n;
  local.used_frames = n;

  // Stage 2: regression to the target's mel-cepstra.
  t0 = Clock::now();
  const nn::DblstmNetwork net = dblstm_from_archive(job.vc_model);
  const nn::Mat pred = net.forward(to_mat(post));
  McepTrack mcep;
  mcep.alpha = voc.alpha;
  mcep.warp_bins = static_cast<std::size_t>(voc.nfft) / 2 + 1;
  mcep.coeffs = FeatureMatrix(n, job.vc_model.output_dim, post.frame_shift);
  const MvnStats& stats = job.vc_model.output_stats;
  for (std::size_t t = 0; t < n; ++t) {
    const auto row = pred.row(t);
    for (std::size_t d = 0; d < mcep.coeffs.dims; ++d) {
      mcep.coeffs.at(t, d) =
          stats.mean.empty() ? row[d]
                             : row[d] * stats.stddev[d] + stats.mean[d];
    }
  }
  smooth_over_time(mcep.coeffs, config.mcep_smooth_frames);
  local.regression_ms = ms_since(t0);

  local.f0_consumed = f0;
  local.ap_consumed = ap;

  t0 = Clock::now();
  Waveform out = synthesize({std::move(f0), std::move(ap), std::move(mcep)},
                            config.sample_rate, voc);
  local.synthesis_ms = ms_since(t0);
  local.total_ms = ms_since(t_total);

  if (report) *report = std::move(local);
  return out;
}

std::string render_report(const ConversionReport& r) {
  std::ostringstream out;
  out << "posterior frames: " << r.posterior_frames << "\n";
  out << "vocoder frames:   " << r.vocoder_frames << "\n";
  out << "frames used:      " << r.used_frames << "\n";
  out << "truncated:        posterior " << r.posterior_frames - r.used_frames
      << ", vocoder " << r.vocoder_frames - r.used_frames << "\n";
  out << "timing (ms):      posteriors " << r.posterior_ms << ", analysis "
      << r.analysis_ms << ", regression " << r.regression_ms << ", synthesis "
      << r.synthesis_ms << ", total " << r.total_ms << "\n";
  return out.str();
}

void save_train_log(const std::string& path, const nn::TrainLog& log) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write training log " + path);
  out.precision(12);
  for (std::size_t e = 0; e < log.epoch_loss.size(); ++e) {
    out << "epoch " << e << " loss " << log.epoch_loss[e];
    if (e < log.epoch_val_accuracy.size())
      out << " val_accuracy " << log.epoch_val_accuracy[e];
    out << "\n";
  }
  if (log.best_epoch >= 0) out << "best_epoch " << log.best_epoch << "\n";
}

}  // namespace vf
