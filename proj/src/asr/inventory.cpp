// src/asr/inventory.cpp

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

#include <fstream>
#include <set>

#include "voiceforge/asr.hpp"
#include "voiceforge/error.hpp"

namespace vf {

PhonemeInventory load_inventory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError("cannot open inventory " + path);

  PhonemeInventory inv;
  std::set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!seen.insert(line).second)
      throw ConfigError("inventory " + path + ": duplicate label '" + line +
                        "'");
    inv.labels.push_back(line);
  }
  if (inv.size() < 2)
    throw ConfigError("inventory " + path + ": need at least two labels");
  return inv;
}

FrameLabels load_frame_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFoundError("cannot open labels " + path);
  FrameLabels labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    try {
      labels.push_back(std::stoi(line));
    } catch (const std::exception&) {
      throw ConfigError("labels " + path + " line " + std::to_string(line_no) +
                        ": not an integer");
    }
  }
  return labels;
}

void save_frame_labels(const std::string& path, const FrameLabels& labels) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write labels " + path);
  for (int v : labels) out << v << "\n";
}

}  // namespace vf
