// include/voiceforge/commands.hpp

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

#ifndef VOICEFORGE_COMMANDS_HPP_
#define VOICEFORGE_COMMANDS_HPP_

#include <string>
#include <vector>

namespace vf {

// Dispatches one CLI invocation; args excludes the program name.
// Subcommands: asr-train, asr-eval, posteriors, analyze, vc-train, convert,
// resynth, gradcheck, make-corpus. Returns 0 on success, 1 on usage errors
// (grammar printed to stderr), 2 on runtime errors.
int run_command(const std::vector<std::string>& args);

}  // namespace vf

#endif  // VOICEFORGE_COMMANDS_HPP_
