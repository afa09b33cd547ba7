// Copyright 2026 The qslbounds Authors
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

namespace qsl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (non-Hermitian matrix,
/// invalid channel parameters, malformed grid, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

/// The matrix handed in as a state is not a density matrix.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not reach its absolute tolerance.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// An internally produced state broke the density-matrix invariants.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The derivative has weight on the kernel of the state, so the
/// Fisher information is unbounded.
class DivergentQfiError : public Error {
 public:
  using Error::Error;
};

/// Zero accumulated speed with a nonzero distance.
class DegenerateBoundError : public Error {
 public:
  using Error::Error;
};

/// The resolution witness never stays below epsilon within the horizon.
class NoTauCriError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsl
