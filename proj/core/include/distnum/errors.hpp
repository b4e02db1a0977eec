// Copyright 2026 The distnum Authors
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

#ifndef DISTNUM_ERRORS_HPP
#define DISTNUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distnum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (degree mismatch, parse errors, bad ranges).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A group or degree would exceed the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The exact solver ran out of its time budget before reaching an answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A requested constructive labeling cannot exist for the given label count.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its post-construction validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An orbit size fell outside {1, 2, n, 2n}; the group belongs to the
/// large-orbit case where a regular set is expected instead of a formula.
class LargeOrbit : public Error {
 public:
  LargeOrbit(std::size_t orbit_size, const std::string& what)
      : Error(what), orbit_size_(orbit_size) {}
  std::size_t orbit_size() const noexcept { return orbit_size_; }

 private:
  std::size_t orbit_size_;
};

}  // namespace distnum

#endif  // DISTNUM_ERRORS_HPP
