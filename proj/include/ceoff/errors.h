// Copyright 2026 The ceoff Authors.
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

#ifndef CEOFF_ERRORS_H_
#define CEOFF_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ceoff {

// Input-validation failures (bad scenario, bad config, bad arguments). The
// CLI maps every subclass of InputError to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A non-positive or non-finite quantity where a positive one is required.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// An assignment that violates the one-processor-per-task constraint, or whose
// shape does not match the scenario.
class FeasibilityError : public InputError {
 public:
  using InputError::InputError;
};

// Solver or sweep hyperparameters out of range.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// Instance too large for exhaustive enumeration.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

// Malformed JSON or a missing / mistyped key.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// File-system failures. Not an InputError: the CLI exits with 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ceoff

#endif  // CEOFF_ERRORS_H_
