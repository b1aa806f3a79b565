// Copyright 2026 The qansatz Authors
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

namespace qansatz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested size exceeds what the simulator can hold (qubit count, memory).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed circuit or state: index out of range, dimension mismatch,
/// missing parameter.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a precondition (incompatible parents, unnormalized
/// distribution, bad configuration value).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Input file could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed to converge or produced a non-finite value.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace qansatz
