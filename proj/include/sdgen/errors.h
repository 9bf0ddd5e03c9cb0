// Copyright 2026 The sdgen Authors. All Rights Reserved.
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

namespace sdgen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data that violates a format or a model precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A malformed edge-list or id-list file. `line()` is 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}

  std::size_t line() const { return line_; }
  /// The message without the line prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// The requested edge count cannot fit in a simple digraph of this size.
class CapacityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A generator rejected too many self-loop/duplicate proposals.
class ResampleLimitError : public Error {
 public:
  ResampleLimitError(std::size_t iteration, const std::string& what)
      : Error(what), iteration_(iteration) {}

  /// 1-based index of the edge insertion that could not be completed.
  std::size_t iteration() const { return iteration_; }

 private:
  std::size_t iteration_;
};

}  // namespace sdgen
