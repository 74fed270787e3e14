// Copyright 2026 The hjba Authors
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

#ifndef HJBA_ERRORS_HPP_
#define HJBA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hjba {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A query pose lies outside the grid (x, y) bounds.
class OutOfBoundsError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver exceeded its iteration cap.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Two fields defined on different grids were combined.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// A value field became non-finite during integration.
class DivergedError : public Error {
 public:
  using Error::Error;
};

/// No member of the safe reachable set satisfies the sampling predicate.
class EmptySampleSpaceError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling of a start region exhausted its retry cap.
class RegionInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The goal cell of a cost map is inside an (inflated) obstacle.
class GoalBlockedError : public Error {
 public:
  using Error::Error;
};

/// A file or stream could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parsed data violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An OS-level read/write failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hjba

#endif  // HJBA_ERRORS_HPP_
