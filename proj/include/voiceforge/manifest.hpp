// include/voiceforge/manifest.hpp

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

#ifndef VOICEFORGE_MANIFEST_HPP_
#define VOICEFORGE_MANIFEST_HPP_

#include <string>
#include <vector>

namespace vf {

struct ManifestEntry {
  std::string audio_path;
  std::string label_path;  // empty for unlabeled corpora

  bool labeled() const { return !label_path.empty(); }
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::string base_dir;

  std::size_t size() const { return entries.size(); }
};

// One entry per non-empty line: "audio_path<TAB>label_path" (label optional).
// '#' lines are comments. Relative paths resolve against the manifest's
// directory and every listed file must exist. Throws FileNotFoundError
// (naming the line number), DuplicateEntryError, or EmptyInputError.
DatasetManifest parse_manifest(const std::string& path);

}  // namespace vf

#endif  // VOICEFORGE_MANIFEST_HPP_
