// src/cli/manifest.cpp

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

#include "voiceforge/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "voiceforge/error.hpp"

namespace vf {

namespace fs = std::filesystem;

namespace {

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  if (path.is_absolute()) return path.string();
  return (base / path).lexically_normal().string();
}

}  // namespace

DatasetManifest parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError("cannot open manifest " + path);

  DatasetManifest manifest;
  manifest.base_dir = fs::path(path).parent_path().string();
  const fs::path base(manifest.base_dir);

  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty() || text[0] == '#') continue;

    ManifestEntry entry;
    const auto tab = text.find('\t');
    if (tab == std::string::npos) {
      entry.audio_path = resolve(base, strip(text));
    } else {
      entry.audio_path = resolve(base, strip(text.substr(0, tab)));
      const std::string label = strip(text.substr(tab + 1));
      if (!label.empty()) entry.label_path = resolve(base, label);
    }

    if (!fs::exists(entry.audio_path))
      throw FileNotFoundError("manifest " + path + " line " +
                              std::to_string(line_no) + ": missing audio file " +
                              entry.audio_path);
    if (!entry.label_path.empty() && !fs::exists(entry.label_path))
      throw FileNotFoundError("manifest " + path + " line " +
                              std::to_string(line_no) + ": missing label file " +
                              entry.label_path);
    if (!seen.insert(entry.audio_path).second)
      throw DuplicateEntryError("manifest " + path + " line " +
                                std::to_string(line_no) + ": duplicate entry " +
                                entry.audio_path);
    manifest.entries.push_back(std::move(entry));
  }

  if (manifest.entries.empty())
    throw EmptyInputError("manifest " + path + " lists no audio files");
  return manifest;
}

}  // namespace vf
