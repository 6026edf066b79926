// src/cli/commands.cpp

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

#include "voiceforge/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "voiceforge/asr.hpp"
#include "voiceforge/error.hpp"
#include "voiceforge/pipeline.hpp"
#include "voiceforge/synthcorpus.hpp"

namespace vf {

namespace {

// Flag overrides land on top of the config file, which lands on top of the
// defaults.
struct CommonOpts {
  std::string config_path;
  PipelineConfig config;

  void finalize() {
    if (!config_path.empty()) config = PipelineConfig::load(config_path);
  }
};

void add_override(CLI::App* cmd, const char* flag, int& target,
                  std::vector<std::function<void()>>& applies,
                  const char* help) {
  auto holder = std::make_shared<int>();
  CLI::Option* opt = cmd->add_option(flag, *holder, help);
  applies.push_back([opt, holder, &target] {
    if (opt->count() > 0) target = *holder;
  });
}

void add_override(CLI::App* cmd, const char* flag, double& target,
                  std::vector<std::function<void()>>& applies,
                  const char* help) {
  auto holder = std::make_shared<double>();
  CLI::Option* opt = cmd->add_option(flag, *holder, help);
  applies.push_back([opt, holder, &target] {
    if (opt->count() > 0) target = *holder;
  });
}

void add_override(CLI::App* cmd, const char* flag, unsigned& target,
                  std::vector<std::function<void()>>& applies,
                  const char* help) {
  auto holder = std::make_shared<unsigned>();
  CLI::Option* opt = cmd->add_option(flag, *holder, help);
  applies.push_back([opt, holder, &target] {
    if (opt->count() > 0) target = *holder;
  });
}

int cmd_asr_train(const PipelineConfig& config, const std::string& manifest,
                  const std::string& inventory_path, const std::string& out) {
  const PhonemeInventory inventory = load_inventory(
      inventory_path.empty() ? config.inventory : inventory_path);
  const DatasetManifest data = parse_manifest(manifest);

  AsrTrainConfig train_config;
  train_config.frontend = config.frontend();
  train_config.hidden_layers = config.asr_hidden_layers;
  train_config.hidden_size = config.asr_hidden_size;
  train_config.optimizer = config.optimizer();

  nn::TrainLog log;
  const ModelArchive archive = train_asr(data, inventory, train_config, &log);
  save_model(out, archive);
  save_train_log(out + ".log", log);

  if (!log.epoch_val_accuracy.empty())
    std::cout << "best validation frame accuracy: "
              << *std::max_element(log.epoch_val_accuracy.begin(),
                                   log.epoch_val_accuracy.end())
              << " (epoch " << log.best_epoch << ")\n";
  std::cout << "model written to " << out << "\n";
  return 0;
}

int cmd_asr_eval(const PipelineConfig& config, const std::string& model_path,
                 const std::string& manifest) {
  const ModelArchive model = load_model(model_path);
  const DatasetManifest data = parse_manifest(manifest);
  const double acc = frame_accuracy(model, data, config.frontend());
  std::cout << "frame accuracy: " << acc << "\n";
  return 0;
}

int cmd_posteriors(const PipelineConfig& config, const std::string& model_path,
                   const std::string& in, const std::string& out) {
  const ModelArchive model = load_model(model_path);
  const Waveform w = resample(read_wav(in), config.sample_rate);
  const FeatureMatrix post = posteriorgram(model, w, config.frontend());
  save_feature_matrix(out, post);
  std::cout << post.frames << " frames x " << post.dims << " classes -> "
            << out << "\n";
  return 0;
}

int cmd_analyze(const PipelineConfig& config, const std::string& in,
                const std::string& out_base) {
  const Waveform w = resample(read_wav(in), config.sample_rate);
  const VocoderConfig voc = config.vocoder_config();
  const AcousticAnalysis a = analyze(w, voc);
  save_analysis(out_base, a, voc);
  std::cout << a.frames() << " frames -> " << out_base
            << ".{f0,ap,mcep}.fmat\n";
  return 0;
}

int cmd_vc_train(const PipelineConfig& config, const std::string& asr_path,
                 const std::string& manifest, const std::string& out,
                 double stop_loss) {
  const ModelArchive asr_model = load_model(asr_path);
  const DatasetManifest data = parse_manifest(manifest);

  const PairSet pairs = build_training_pairs(asr_model, data, config);
  nn::OptimizerConfig opt = config.optimizer();
  opt.stop_loss = stop_loss;

  nn::TrainLog log;
  const ModelArchive archive = train_conversion_model(
      pairs, config.vc_layers, config.vc_hidden, opt, &log);
  save_model(out, archive);
  save_train_log(out + ".log", log);

  std::cout << pairs.pairs.size() << " pairs, final training mse "
            << (log.epoch_loss.empty() ? 0.0 : log.epoch_loss.back()) << "\n";
  std::cout << "model written to " << out << "\n";
  return 0;
}

int cmd_convert(const PipelineConfig& config, const std::string& asr_path,
                const std::string& vc_path, const std::string& in,
                const std::string& out, const std::string& report_path) {
  ConversionJob job;
  job.asr_model = load_model(asr_path);
  job.vc_model = load_model(vc_path);
  job.source = read_wav(in);
  job.output_path = out;

  ConversionReport report;
  const Waveform converted = convert(job, config, &report);
  const WavWriteStats stats = write_wav(out, converted);
  if (stats.clipped_samples > 0)
    std::cerr << "warning: " << stats.clipped_samples
              << " samples saturated on write\n";

  const std::string rendered = render_report(report);
  if (!report_path.empty()) {
    std::ofstream rf(report_path);
    if (!rf) throw IoError("cannot write report " + report_path);
    rf << rendered;
  }
  std::cout << rendered << "wrote " << out << "\n";
  return 0;
}

int cmd_resynth(const PipelineConfig& config, const std::string& in,
                const std::string& out) {
  const Waveform w = resample(read_wav(in), config.sample_rate);
  const VocoderConfig voc = config.vocoder_config();
  const Waveform y = synthesize(analyze(w, voc), config.sample_rate, voc);
  write_wav(out, y);
  std::cout << "wrote " << out << "\n";
  return 0;
}

nn::Mat random_mat(std::size_t rows, std::size_t cols, unsigned seed,
                   double scale) {
  nn::Mat m(rows, cols);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (auto& v : m.flat()) v = dist(rng);
  return m;
}

int cmd_gradcheck(int seeds) {
  // Targets sit at modest amplitude so central-difference roundoff stays
  // below the reporting floor; see the nn tests for the analysis.
  double worst_dense = 0.0, worst_blstm = 0.0, worst_deep = 0.0;
  for (int s = 1; s <= seeds; ++s) {
    const unsigned seed = static_cast<unsigned>(s);
    {
      nn::DnnClassifier net(6, 5, 1, 3, seed);
      nn::ClassifiedFrames sample{random_mat(8, 6, seed + 200, 1.0), {}};
      std::mt19937 rng(seed + 300);
      std::uniform_int_distribution<int> lab(0, 2);
      for (int t = 0; t < 8; ++t) sample.labels.push_back(lab(rng));
      worst_dense = std::max(worst_dense, nn::grad_check(net, sample));
    }
    {
      nn::DblstmNetwork net(5, 3, 1, 6, seed);
      nn::SequenceExample sample{random_mat(7, 5, seed + 400, 1.0),
                                 random_mat(7, 3, seed + 1400, 0.25)};
      worst_blstm =
          std::max(worst_blstm, nn::grad_check(net, sample, nn::Loss::mse));
    }
    {
      nn::DblstmNetwork net(4, 3, 2, 5, seed);
      nn::SequenceExample sample{random_mat(6, 4, seed + 500, 1.0),
                                 random_mat(6, 3, seed + 1500, 0.25)};
      worst_deep =
          std::max(worst_deep, nn::grad_check(net, sample, nn::Loss::mse));
    }
  }
  const double worst = std::max({worst_dense, worst_blstm, worst_deep});
  std::cout << "dense+softmax+cross-entropy: max relative error "
            << worst_dense << "\n";
  std::cout << "single blstm layer + mse:    max relative error "
            << worst_blstm << "\n";
  std::cout << "two-layer dblstm + mse:      max relative error "
            << worst_deep << "\n";
  std::cout << "overall: " << worst << (worst < 1e-4 ? " (ok)" : " (FAIL)")
            << "\n";
  return worst < 1e-4 ? 0 : 2;
}

int cmd_make_corpus(const PipelineConfig& config, const std::string& kind,
                    const std::string& out_dir, int count, unsigned seed) {
  SynthCorpusConfig corpus;
  corpus.num_utterances = count;
  corpus.sample_rate = config.sample_rate;
  corpus.seed = seed;
  if (kind == "asr") {
    generate_asr_corpus(out_dir, corpus, config.frontend());
  } else if (kind == "target") {
    corpus.min_duration = 0.8;
    corpus.max_duration = 1.6;
    generate_target_corpus(out_dir, corpus);
  } else {
    throw ConfigError("make-corpus: kind must be 'asr' or 'target'");
  }
  std::cout << count << " utterances written to " << out_dir << "\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"voiceforge: singing voice conversion toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--config", common.config_path,
                 "pipeline config file (key = value lines)");
  std::vector<std::function<void()>> overrides;

  // asr-train
  std::string manifest, inventory, out, model_path, in_path, vc_path;
  std::string report_path, corpus_kind, out_dir;
  double stop_loss = 0.0;
  int gradcheck_seeds = 10;
  int corpus_count = 100;
  unsigned corpus_seed = 7;

  CLI::App* asr_train = app.add_subcommand(
      "asr-train", "train the phoneme classifier on a labeled manifest");
  asr_train->add_option("--manifest", manifest, "labeled dataset manifest")
      ->required();
  asr_train->add_option("--out", out, "output model path")->required();
  asr_train->add_option("--inventory", inventory,
                        "phoneme inventory (overrides config)");
  add_override(asr_train, "--epochs", common.config.epochs, overrides,
               "training epochs");
  add_override(asr_train, "--lr", common.config.learning_rate, overrides,
               "learning rate");
  add_override(asr_train, "--hidden", common.config.asr_hidden_size, overrides,
               "hidden layer width");
  add_override(asr_train, "--layers", common.config.asr_hidden_layers,
               overrides, "hidden layer count");
  add_override(asr_train, "--seed", common.config.seed, overrides, "RNG seed");

  CLI::App* asr_eval = app.add_subcommand(
      "asr-eval", "print frame accuracy on a labeled manifest");
  asr_eval->add_option("--model", model_path, "classifier archive")->required();
  asr_eval->add_option("--manifest", manifest, "labeled dataset manifest")
      ->required();

  CLI::App* posteriors = app.add_subcommand(
      "posteriors", "write the phonetic posteriorgram of one utterance");
  posteriors->add_option("--model", model_path, "classifier archive")
      ->required();
  posteriors->add_option("--in", in_path, "input wav")->required();
  posteriors->add_option("--out", out, "output feature matrix")->required();

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "vocoder analysis (f0, aperiodicity, mel-cepstrum) to files");
  analyze_cmd->add_option("--in", in_path, "input wav")->required();
  analyze_cmd->add_option("--out", out, "output basename")->required();

  CLI::App* vc_train = app.add_subcommand(
      "vc-train", "train a conversion model for one target voice");
  vc_train->add_option("--asr", model_path, "classifier archive")->required();
  vc_train->add_option("--manifest", manifest, "unlabeled target manifest")
      ->required();
  vc_train->add_option("--out", out, "output model path")->required();
  vc_train->add_option("--stop-loss", stop_loss,
                       "stop once epoch mse reaches this value");
  add_override(vc_train, "--epochs", common.config.epochs, overrides,
               "training epochs");
  add_override(vc_train, "--lr", common.config.learning_rate, overrides,
               "learning rate");
  add_override(vc_train, "--hidden", common.config.vc_hidden, overrides,
               "hidden size per direction");
  add_override(vc_train, "--layers", common.config.vc_layers, overrides,
               "stacked layer count");
  add_override(vc_train, "--seed", common.config.seed, overrides, "RNG seed");

  CLI::App* convert_cmd = app.add_subcommand(
      "convert", "convert a source recording to the target voice");
  convert_cmd->add_option("--asr", model_path, "classifier archive")
      ->required();
  convert_cmd->add_option("--vc", vc_path, "conversion model archive")
      ->required();
  convert_cmd->add_option("--in", in_path, "source wav")->required();
  convert_cmd->add_option("--out", out, "output wav")->required();
  convert_cmd->add_option("--report", report_path, "conversion report path");

  CLI::App* resynth = app.add_subcommand(
      "resynth", "vocoder analysis-synthesis loop on one utterance");
  resynth->add_option("--in", in_path, "input wav")->required();
  resynth->add_option("--out", out, "output wav")->required();

  CLI::App* gradcheck = app.add_subcommand(
      "gradcheck", "verify analytic gradients against central differences");
  gradcheck->add_option("--seeds", gradcheck_seeds, "random seeds per model")
      ->check(CLI::PositiveNumber);

  CLI::App* make_corpus = app.add_subcommand(
      "make-corpus", "generate a synthetic corpus (kinds: asr, target)");
  make_corpus->add_option("--kind", corpus_kind, "asr or target")->required();
  make_corpus->add_option("--out", out_dir, "output directory")->required();
  make_corpus->add_option("--count", corpus_count, "utterance count");
  make_corpus->add_option("--seed", corpus_seed, "RNG seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 1;
  }

  try {
    common.finalize();
    for (const auto& apply : overrides) apply();
    common.config.validate();

    if (asr_train->parsed())
      return cmd_asr_train(common.config, manifest, inventory, out);
    if (asr_eval->parsed())
      return cmd_asr_eval(common.config, model_path, manifest);
    if (posteriors->parsed())
      return cmd_posteriors(common.config, model_path, in_path, out);
    if (analyze_cmd->parsed())
      return cmd_analyze(common.config, in_path, out);
    if (vc_train->parsed())
      return cmd_vc_train(common.config, model_path, manifest, out, stop_loss);
    if (convert_cmd->parsed())
      return cmd_convert(common.config, model_path, vc_path, in_path, out,
                         report_path);
    if (resynth->parsed()) return cmd_resynth(common.config, in_path, out);
    if (gradcheck->parsed()) return cmd_gradcheck(gradcheck_seeds);
    if (make_corpus->parsed())
      return cmd_make_corpus(common.config, corpus_kind, out_dir, corpus_count,
                             corpus_seed);
    std::cerr << app.help();
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vf
