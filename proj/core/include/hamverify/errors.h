// Copyright 2026 The hamverify Authors
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

#ifndef HAMVERIFY_ERRORS_H_
#define HAMVERIFY_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamverify {

// Precondition violation on a library call (bad vertex index, loop, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized graph. `offset` is the 0-based byte offset inside the
// record that triggered the failure; `line` is 1-based, 0 when unknown.
class FormatError : public InputError {
 public:
  FormatError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : InputError(what), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

// The instance is valid but exceeds a hard engine bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hamverify

#endif  // HAMVERIFY_ERRORS_H_
