// include/voiceforge/audio.hpp

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

#ifndef VOICEFORGE_AUDIO_HPP_
#define VOICEFORGE_AUDIO_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace vf {

// Mono floating-point audio. Samples live in [-1, 1]; the sample rate is
// whatever the source file carried until resample() is applied.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Reads a RIFF/WAVE file. Accepts 16-bit PCM and 32-bit IEEE float, mono or
// stereo. Stereo is downmixed by channel mean; integer samples are scaled by
// 1/32768. Throws FileNotFoundError, CorruptHeaderError, or
// UnsupportedEncodingError.
Waveform read_wav(const std::string& path);

struct WavWriteStats {
  // Samples with |x| > 1 that were saturated to full scale.
  std::size_t clipped_samples = 0;
};

// Writes 16-bit PCM mono with a canonical 44-byte header. Out-of-range
// samples saturate and are counted in the returned stats. Throws
// EmptyInputError for an empty waveform and IoError on write failure.
WavWriteStats write_wav(const std::string& path, const Waveform& w);

// Windowed-sinc rate conversion. Output length is round(n * target / source).
// Returns the input unchanged when the rates already match.
Waveform resample(const Waveform& w, int target_rate);

}  // namespace vf

#endif  // VOICEFORGE_AUDIO_HPP_
