// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace heqvpe {

/// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Input violates a documented invariant (symmetry, shape, photon count, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem size beyond a documented ceiling.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Free circuit parameter used without a bound value, or length mismatch.
class BindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric contract broken: non-Hermitian operator, non-unitary matrix,
/// non-finite objective value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heqvpe
