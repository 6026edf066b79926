// include/voiceforge/error.hpp

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

#ifndef VOICEFORGE_ERROR_HPP_
#define VOICEFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace vf {

// Base class for everything the toolkit throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FileNotFoundError : public IoError {
 public:
  using IoError::IoError;
};

// Malformed RIFF/WAVE container.
class CorruptHeaderError : public Error {
 public:
  using Error::Error;
};

// Valid container, but a sample encoding we do not handle.
class UnsupportedEncodingError : public Error {
 public:
  using Error::Error;
};

// Binary file (feature matrix, model archive) is structurally broken.
class CorruptFileError : public Error {
 public:
  using Error::Error;
};

// Magic/version bytes do not match what the reader expects.
class VersionMismatchError : public Error {
 public:
  using Error::Error;
};

// Stored checksum disagrees with the recomputed one.
class ChecksumError : public Error {
 public:
  using Error::Error;
};

class DimMismatchError : public Error {
 public:
  using Error::Error;
};

// A model archive's geometry does not match the features handed to it.
class ArchitectureMismatchError : public DimMismatchError {
 public:
  using DimMismatchError::DimMismatchError;
};

// Feature tracks that must share a frame grid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// Frame labels do not line up with the feature frames of the utterance.
class LabelMismatchError : public Error {
 public:
  using Error::Error;
};

class SignalTooShortError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class DuplicateEntryError : public Error {
 public:
  using Error::Error;
};

// Loss or activation went non-finite during training.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace vf

#endif  // VOICEFORGE_ERROR_HPP_
