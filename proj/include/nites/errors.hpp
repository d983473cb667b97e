// Copyright 2026  The nites authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NITES_ERRORS_HPP_
#define NITES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nites {

// Base class for everything thrown by this library. The CLI maps the
// subclasses onto its exit codes (usage 2, I/O 3, numerical 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// File was read but its contents are not what we support.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A function was called with values violating its preconditions.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Configuration is syntactically or semantically invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Statistical fitting failed (insufficient or degenerate data).
class FitError : public Error {
 public:
  using Error::Error;
};

// A model file is unreadable, or a fitted model cannot be sampled from.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace nites

#endif  // NITES_ERRORS_HPP_
