// include/voiceforge/fft.hpp

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

#ifndef VOICEFORGE_FFT_HPP_
#define VOICEFORGE_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace vf {

// In-place radix-2 transform. Size must be a power of two. The inverse
// transform divides by N, so ifft(fft(x)) == x.
void fft(std::vector<std::complex<double>>& a, bool inverse = false);

std::size_t next_pow2(std::size_t n);

// Forward transform of a real signal zero-padded to nfft (a power of two);
// returns the nfft/2+1 non-redundant bins.
std::vector<std::complex<double>> rfft(const std::vector<double>& x,
                                       std::size_t nfft);

// Inverse of rfft: reconstructs the real nfft-point signal from the
// nfft/2+1 bins of a conjugate-symmetric spectrum.
std::vector<double> irfft(const std::vector<std::complex<double>>& bins,
                          std::size_t nfft);

}  // namespace vf

#endif  // VOICEFORGE_FFT_HPP_
