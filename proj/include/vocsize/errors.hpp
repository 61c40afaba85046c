// Copyright 2026 The vocsize Authors.
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

#ifndef VOCSIZE_ERRORS_HPP_
#define VOCSIZE_ERRORS_HPP_

#include <stdexcept>

namespace vocsize {

// File system and stream failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (encoding, JSON, CSV, model files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its contract.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine could not produce a valid result.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vocsize

#endif  // VOCSIZE_ERRORS_HPP_
