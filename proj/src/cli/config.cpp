// src/cli/config.cpp

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

#include "voiceforge/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "voiceforge/error.hpp"

namespace vf {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

MfccConfig PipelineConfig::mfcc_config() const {
  MfccConfig c;
  c.sample_rate = sample_rate;
  c.frame_length_ms = frame_length_ms;
  c.frame_shift_ms = frame_shift_ms;
  c.preemphasis = preemphasis;
  c.num_filters = num_mel_filters;
  c.num_coeffs = num_mfcc;
  c.nfft = nfft;
  c.high_freq = sample_rate / 2.0;
  return c;
}

FrontendConfig PipelineConfig::frontend() const {
  return {mfcc_config(), context_left, context_right};
}

VocoderConfig PipelineConfig::vocoder_config() const {
  VocoderConfig c;
  c.sample_rate = sample_rate;
  c.frame_shift_ms = frame_shift_ms;
  c.frame_length_ms = frame_length_ms;
  c.f0_floor = f0_floor;
  c.f0_ceil = f0_ceil;
  c.alpha = alpha;
  c.mcep_order = mcep_order;
  return c;
}

nn::OptimizerConfig PipelineConfig::optimizer() const {
  nn::OptimizerConfig c;
  c.learning_rate = learning_rate;
  c.momentum = momentum;
  c.grad_clip = grad_clip;
  c.epochs = epochs;
  c.seed = seed;
  return c;
}

void PipelineConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
  if (sample_rate <= 0) fail("sample_rate must be positive");
  if (frame_length_ms <= 0 || frame_shift_ms <= 0)
    fail("frame geometry must be positive");
  if (frame_shift_ms > frame_length_ms)
    fail("frame_shift_ms must not exceed frame_length_ms");
  if (preemphasis < 0.0 || preemphasis >= 1.0)
    fail("preemphasis must be in [0, 1)");
  if (num_mfcc < 1 || num_mel_filters < num_mfcc)
    fail("need num_mel_filters >= num_mfcc >= 1");
  if (nfft < sample_rate * frame_length_ms / 1000.0)
    fail("nfft must cover one frame");
  if (context_left < 0 || context_right < 0) fail("context must be >= 0");
  if (alpha <= -1.0 || alpha >= 1.0) fail("alpha must be in (-1, 1)");
  if (f0_floor <= 0 || f0_ceil <= f0_floor)
    fail("need 0 < f0_floor < f0_ceil");
  if (mcep_order < 1) fail("mcep_order must be >= 1");
  if (mcep_smooth_frames < 0) fail("mcep_smooth_frames must be >= 0");
  if (asr_hidden_layers < 0 || asr_hidden_size < 1)
    fail("bad ASR architecture");
  if (vc_layers < 1 || vc_hidden < 1) fail("bad conversion architecture");
  if (learning_rate < 0) fail("learning_rate must be >= 0");
  if (momentum < 0 || momentum >= 1) fail("momentum must be in [0, 1)");
  if (grad_clip < 0) fail("grad_clip must be >= 0");
  if (epochs < 1) fail("epochs must be >= 1");
}

void PipelineConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write config " + path);
  out << "sample_rate = " << sample_rate << "\n";
  out << "frame_length_ms = " << format_double(frame_length_ms) << "\n";
  out << "frame_shift_ms = " << format_double(frame_shift_ms) << "\n";
  out << "preemphasis = " << format_double(preemphasis) << "\n";
  out << "num_mel_filters = " << num_mel_filters << "\n";
  out << "num_mfcc = " << num_mfcc << "\n";
  out << "nfft = " << nfft << "\n";
  out << "context_left = " << context_left << "\n";
  out << "context_right = " << context_right << "\n";
  out << "inventory = " << inventory << "\n";
  out << "alpha = " << format_double(alpha) << "\n";
  out << "f0_floor = " << format_double(f0_floor) << "\n";
  out << "f0_ceil = " << format_double(f0_ceil) << "\n";
  out << "mcep_order = " << mcep_order << "\n";
  out << "mcep_smooth_frames = " << mcep_smooth_frames << "\n";
  out << "asr_hidden_layers = " << asr_hidden_layers << "\n";
  out << "asr_hidden_size = " << asr_hidden_size << "\n";
  out << "vc_layers = " << vc_layers << "\n";
  out << "vc_hidden = " << vc_hidden << "\n";
  out << "learning_rate = " << format_double(learning_rate) << "\n";
  out << "momentum = " << format_double(momentum) << "\n";
  out << "grad_clip = " << format_double(grad_clip) << "\n";
  out << "epochs = " << epochs << "\n";
  out << "seed = " << seed << "\n";
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError("cannot open config " + path);

  PipelineConfig c;
  std::map<std::string, std::function<void(const std::string&)>> setters;
  auto set_int = [](int& field) {
    return [&field](const std::string& v) { field = std::stoi(v); };
  };
  auto set_double = [](double& field) {
    return [&field](const std::string& v) { field = std::stod(v); };
  };
  setters["sample_rate"] = set_int(c.sample_rate);
  setters["frame_length_ms"] = set_double(c.frame_length_ms);
  setters["frame_shift_ms"] = set_double(c.frame_shift_ms);
  setters["preemphasis"] = set_double(c.preemphasis);
  setters["num_mel_filters"] = set_int(c.num_mel_filters);
  setters["num_mfcc"] = set_int(c.num_mfcc);
  setters["nfft"] = set_int(c.nfft);
  setters["context_left"] = set_int(c.context_left);
  setters["context_right"] = set_int(c.context_right);
  setters["inventory"] = [&c](const std::string& v) { c.inventory = v; };
  setters["alpha"] = set_double(c.alpha);
  setters["f0_floor"] = set_double(c.f0_floor);
  setters["f0_ceil"] = set_double(c.f0_ceil);
  setters["mcep_order"] = set_int(c.mcep_order);
  setters["mcep_smooth_frames"] = set_int(c.mcep_smooth_frames);
  setters["asr_hidden_layers"] = set_int(c.asr_hidden_layers);
  setters["asr_hidden_size"] = set_int(c.asr_hidden_size);
  setters["vc_layers"] = set_int(c.vc_layers);
  setters["vc_hidden"] = set_int(c.vc_hidden);
  setters["learning_rate"] = set_double(c.learning_rate);
  setters["momentum"] = set_double(c.momentum);
  setters["grad_clip"] = set_double(c.grad_clip);
  setters["epochs"] = set_int(c.epochs);
  setters["seed"] = [&c](const std::string& v) {
    c.seed = static_cast<unsigned>(std::stoul(v));
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + " line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    const std::string key = strip(text.substr(0, eq));
    const std::string value = strip(text.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError(path + " line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    try {
      it->second(value);
    } catch (const std::exception&) {
      throw ConfigError(path + " line " + std::to_string(line_no) +
                        ": bad value for '" + key + "'");
    }
  }

  c.validate();
  return c;
}

}  // namespace vf
