// Copyright 2026 The dbwalk Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dbwalk {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed input. The CLI maps these to exit 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded. The CLI maps these to exit 2.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Raised when a character cannot be decoded as a symbol.
class DecodeError : public DomainError {
 public:
  DecodeError(const std::string& what, std::size_t position)
      : DomainError(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal consistency check failed, e.g. a verification record whose
// fields contradict one another. Never expected in a correct build.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dbwalk
