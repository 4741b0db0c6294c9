// Copyright 2026 The gsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid problem parameters (non-prime modulus, k out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operands disagree on (p, n).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Oracle answers are inconsistent with any hidden subgroup of the promised rank.
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

/// An enumeration or simulation cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance, subgroup, or trace text.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsp
