// Copyright 2026 The galab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GALAB_ERROR_HPP
#define GALAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galab {

// Precondition violations use std::invalid_argument / std::out_of_range.
// The types below cover the two failure classes the CLI maps to distinct
// exit codes.

/// A file could not be opened, read, or written.
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed content in a text input. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

  /// Same error with `prefix` (typically a file name) prepended.
  static ParseError in(const std::string& prefix, const ParseError& e) {
    ParseError out(prefix + ": " + e.what(), 0);
    out.line_ = e.line_;
    return out;
  }

 private:
  std::size_t line_;
};

}  // namespace galab

#endif  // GALAB_ERROR_HPP
