// Copyright 2026 The overlap-forge Authors
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

#ifndef OVERLAP_FORGE_ERRORS_H
#define OVERLAP_FORGE_ERRORS_H

#include <stdexcept>
#include <string>

namespace overlap_forge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input vectors are (numerically) linearly dependent.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The problem does not belong to the regime the solver handles.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// No physical branch probabilities exist for the requested targets.
/// `excess()` is how far the feasibility measure overshoots its bound.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double excess)
      : Error(what), excess_(excess) {}
  double excess() const { return excess_; }

 private:
  double excess_;
};

/// A solution handed to the synthesis layer does not reproduce the input
/// Gram data. Signals a solver bug, never a user error.
class InconsistentSolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_ERRORS_H
