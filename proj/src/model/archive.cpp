// src/model/archive.cpp

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

#include "voiceforge/model_archive.hpp"

#include <string>

#include "voiceforge/error.hpp"
#include "voiceforge/io_util.hpp"

namespace vf {

namespace {

constexpr char kMagic[4] = {'V', 'F', 'M', '1'};

template <typename Net>
std::vector<float> quantize_params(const Net& net) {
  std::vector<float> out;
  out.reserve(net.param_count());
  for (const auto& view : net.param_views())
    for (double v : view) out.push_back(static_cast<float>(v));
  return out;
}

template <typename Net>
void load_params(Net& net, const std::vector<float>& params) {
  std::size_t off = 0;
  for (auto& view : net.param_views()) {
    for (auto& v : view) v = static_cast<double>(params[off++]);
  }
}

void put_stats(ByteWriter& w, const MvnStats& s) {
  w.put_u32(static_cast<std::uint32_t>(s.mean.size()));
  for (double v : s.mean) w.put_f64(v);
  for (double v : s.stddev) w.put_f64(v);
}

MvnStats get_stats(ByteReader& r) {
  MvnStats s;
  const std::uint32_t dim = r.get_u32();
  s.mean.resize(dim);
  s.stddev.resize(dim);
  for (auto& v : s.mean) v = r.get_f64();
  for (auto& v : s.stddev) v = r.get_f64();
  return s;
}

std::size_t expected_param_count(const ModelArchive& a) {
  const std::size_t in = a.input_dim, out = a.output_dim;
  const std::size_t hidden = a.hidden_size, layers = a.num_layers;
  if (a.kind == ModelArchive::Kind::dnn_classifier) {
    std::size_t n = 0, prev = in;
    for (std::size_t l = 0; l < layers; ++l) {
      n += hidden * prev + hidden;
      prev = hidden;
    }
    return n + out * prev + out;
  }
  std::size_t n = 0, prev = in;
  for (std::size_t l = 0; l < layers; ++l) {
    n += 2 * (4 * hidden * (prev + hidden) + 4 * hidden);
    prev = 2 * hidden;
  }
  return n + out * prev + out;
}

void validate(const ModelArchive& a, const std::string& context) {
  if (a.kind != ModelArchive::Kind::dnn_classifier &&
      a.kind != ModelArchive::Kind::dblstm)
    throw CorruptFileError(context + ": unknown model kind");
  if (a.params.size() != expected_param_count(a))
    throw CorruptFileError(context + ": parameter count " +
                           std::to_string(a.params.size()) +
                           " does not match the architecture (" +
                           std::to_string(expected_param_count(a)) + ")");
  if (!a.input_stats.mean.empty() && a.input_stats.mean.size() != a.input_dim)
    throw CorruptFileError(context + ": input stats dim mismatch");
  if (!a.output_stats.mean.empty() &&
      a.output_stats.mean.size() != a.output_dim)
    throw CorruptFileError(context + ": output stats dim mismatch");
}

}  // namespace

ModelArchive to_archive(const nn::DnnClassifier& net,
                        const MvnStats& input_stats) {
  ModelArchive a;
  a.kind = ModelArchive::Kind::dnn_classifier;
  a.input_dim = static_cast<std::uint32_t>(net.input_dim());
  a.output_dim = static_cast<std::uint32_t>(net.num_classes());
  a.num_layers = static_cast<std::uint32_t>(net.hidden_layers());
  a.hidden_size = static_cast<std::uint32_t>(net.hidden_size());
  for (const auto& layer : net.layers())
    a.activations.push_back(static_cast<std::uint32_t>(layer.activation));
  a.input_stats = input_stats;
  a.params = quantize_params(net);
  return a;
}

ModelArchive to_archive(const nn::DblstmNetwork& net,
                        const MvnStats& output_stats) {
  ModelArchive a;
  a.kind = ModelArchive::Kind::dblstm;
  a.input_dim = static_cast<std::uint32_t>(net.input_dim());
  a.output_dim = static_cast<std::uint32_t>(net.output_dim());
  a.num_layers = static_cast<std::uint32_t>(net.num_layers());
  a.hidden_size = static_cast<std::uint32_t>(net.hidden_size());
  a.activations.push_back(
      static_cast<std::uint32_t>(net.output_layer().activation));
  a.output_stats = output_stats;
  a.params = quantize_params(net);
  return a;
}

nn::DnnClassifier classifier_from_archive(const ModelArchive& a) {
  if (a.kind != ModelArchive::Kind::dnn_classifier)
    throw ArchitectureMismatchError(
        "classifier_from_archive: archive holds a different model kind");
  validate(a, "classifier_from_archive");
  nn::DnnClassifier net(static_cast<int>(a.input_dim),
                        static_cast<int>(a.hidden_size),
                        static_cast<int>(a.num_layers),
                        static_cast<int>(a.output_dim), /*seed=*/0);
  load_params(net, a.params);
  return net;
}

nn::DblstmNetwork dblstm_from_archive(const ModelArchive& a) {
  if (a.kind != ModelArchive::Kind::dblstm)
    throw ArchitectureMismatchError(
        "dblstm_from_archive: archive holds a different model kind");
  validate(a, "dblstm_from_archive");
  nn::DblstmNetwork net(static_cast<int>(a.input_dim),
                        static_cast<int>(a.output_dim),
                        static_cast<int>(a.num_layers),
                        static_cast<int>(a.hidden_size), /*seed=*/0);
  load_params(net, a.params);
  return net;
}

void save_model(const std::string& path, const ModelArchive& a) {
  ByteWriter w;
  w.put_magic(kMagic);
  w.put_u32(static_cast<std::uint32_t>(a.kind));
  w.put_u32(a.input_dim);
  w.put_u32(a.output_dim);
  w.put_u32(a.num_layers);
  w.put_u32(a.hidden_size);
  w.put_u32(static_cast<std::uint32_t>(a.activations.size()));
  for (std::uint32_t id : a.activations) w.put_u32(id);
  put_stats(w, a.input_stats);
  put_stats(w, a.output_stats);
  w.put_u32(static_cast<std::uint32_t>(a.params.size()));
  for (float v : a.params) w.put_f32(v);
  w.put_u32(crc32(w.bytes()));
  write_file(path, w.bytes());
}

ModelArchive load_model(const std::string& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  ByteReader r(bytes.data(), bytes.size());

  std::string magic;
  try {
    magic = r.get_magic();
  } catch (const CorruptFileError&) {
    throw CorruptFileError(path + ": too short for a model archive");
  }
  if (magic != std::string(kMagic, 4))
    throw VersionMismatchError(path + ": expected magic VFM1, found '" +
                               magic + "'");

  ModelArchive a;
  try {
    a.kind = static_cast<ModelArchive::Kind>(r.get_u32());
    a.input_dim = r.get_u32();
    a.output_dim = r.get_u32();
    a.num_layers = r.get_u32();
    a.hidden_size = r.get_u32();
    const std::uint32_t n_act = r.get_u32();
    a.activations.resize(n_act);
    for (auto& id : a.activations) id = r.get_u32();
    a.input_stats = get_stats(r);
    a.output_stats = get_stats(r);
    const std::uint32_t n_params = r.get_u32();
    if (r.remaining() < static_cast<std::size_t>(n_params) * 4 + 4)
      throw CorruptFileError(path + ": truncated parameter block");
    a.params.resize(n_params);
    for (auto& v : a.params) v = r.get_f32();
  } catch (const CorruptFileError& e) {
    throw CorruptFileError(path + ": " + e.what());
  }

  if (r.remaining() != 4)
    throw CorruptFileError(path + ": trailing bytes after checksum");
  const std::uint32_t stored = r.get_u32();
  const std::uint32_t computed =
      crc32({bytes.data(), bytes.size() - 4});
  if (stored != computed)
    throw ChecksumError(path + ": checksum mismatch (stored " +
                        std::to_string(stored) + ", computed " +
                        std::to_string(computed) + ")");

  validate(a, path);
  return a;
}

}  // namespace vf
