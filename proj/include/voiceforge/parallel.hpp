// include/voiceforge/parallel.hpp

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

#ifndef VOICEFORGE_PARALLEL_HPP_
#define VOICEFORGE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace vf {

// Worker cap: VOICEFORGE_THREADS if set (>= 1), otherwise the machine's
// hardware concurrency.
int max_threads();

// Runs fn(0..n-1), possibly concurrently. Each index must write only its
// own output slot so results are identical to a sequential loop. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace vf

#endif  // VOICEFORGE_PARALLEL_HPP_
