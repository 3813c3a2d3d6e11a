// Copyright 2026 The qdeform Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdeform {

/// Base class for domain failures. Precondition violations on plain
/// arguments (negative counts, non-positive q, ...) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The matrix has support on Pauli strings outside
/// {I, Z_low, Z_high, Z_high Z_low, X_high, X_high Z_low}.
class NotInSpinFamily : public Error {
 public:
  NotInSpinFamily(const std::string& msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A conditional single-qubit block has zero rotation rate.
class DegenerateBlock : public Error {
 public:
  using Error::Error;
};

/// The sampling step cannot resolve the highest frequency the Hamiltonian
/// can produce.
class NyquistViolation : public Error {
 public:
  NyquistViolation(const std::string& msg, double nyquist, double required)
      : Error(msg), nyquist_(nyquist), required_(required) {}
  /// pi / dt
  double nyquist() const { return nyquist_; }
  /// 2 * (upper bound on the largest energy)
  double required() const { return required_; }

 private:
  double nyquist_;
  double required_;
};

class InsufficientPeaks : public Error {
 public:
  InsufficientPeaks(const std::string& msg, std::size_t found,
                    std::size_t expected)
      : Error(msg), found_(found), expected_(expected) {}
  std::size_t found() const { return found_; }
  std::size_t expected() const { return expected_; }

 private:
  std::size_t found_;
  std::size_t expected_;
};

/// A 4x4 matrix couples the even and odd Fock-parity subspaces.
class NotBlockStructured : public Error {
 public:
  using Error::Error;
};

}  // namespace qdeform
