// include/voiceforge/synthcorpus.hpp

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

// Synthetic labeled corpora so training, evaluation and conversion can be
// exercised hermetically, without shipping any recorded speech.

#ifndef VOICEFORGE_SYNTHCORPUS_HPP_
#define VOICEFORGE_SYNTHCORPUS_HPP_

#include <string>

#include "voiceforge/audio.hpp"
#include "voiceforge/features.hpp"

namespace vf {

struct SynthCorpusConfig {
  int num_utterances = 500;
  double min_duration = 0.4;
  double max_duration = 0.7;
  int sample_rate = 16000;
  unsigned seed = 7;
};

// Three-class classification corpus: a dark harmonic tone, a bright
// harmonic tone, and noise, one stationary class per utterance. Writes
// utt_NNNN.wav, utt_NNNN.lab (one frame label per line on the front-end
// grid), manifest.txt and inventory.txt into `dir`.
void generate_asr_corpus(const std::string& dir,
                         const SynthCorpusConfig& config,
                         const FrontendConfig& frontend);

// Unlabeled "target speaker" corpus: multi-segment voiced utterances with
// gliding pitch and vowel-like formant envelopes, occasionally broken by
// breathy noise segments. Writes utt_NNNN.wav and manifest.txt.
void generate_target_corpus(const std::string& dir,
                            const SynthCorpusConfig& config,
                            double f0_low = 150.0, double f0_high = 280.0);

// One speech-like utterance; exposed for tests and for making conversion
// sources with a different pitch range than the target corpus.
Waveform synth_voiced_utterance(double duration, int sample_rate,
                                unsigned seed, double f0_low, double f0_high);

}  // namespace vf

#endif  // VOICEFORGE_SYNTHCORPUS_HPP_
