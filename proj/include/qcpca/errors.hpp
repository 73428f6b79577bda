// Copyright 2026 The qcpca authors
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

#include <stdexcept>
#include <string>

namespace qcpca {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible sizes (matrix dimensions, vector lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A domain invariant failed validation. The message names the invariant
/// and carries the measured residual.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver exhausted its sweep budget without reaching the
/// off-diagonal target.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Unreadable input or malformed problem file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcpca
