// Copyright 2026 The qwalk Authors
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

namespace qwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A label, index or shifted coordinate fell outside the lattice.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Input violated a documented precondition (non-unit coin, bad config...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined on the given state (e.g. renormalizing zero).
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// A dense matrix would exceed the dimension cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
