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

// Mapping between 4x4 oscillator Hamiltonians and two-spin Pauli form
//
//   H = d1 + d2 Z_lo + d3 Z_hi + d4 Z_hi Z_lo + d5 X_hi + d6 X_hi Z_lo.
//
// Qubit convention: Fock level n = 2*n_hi + n_lo, i.e. n_hi is the most
// significant bit. Z has eigenvalue +1 on bit 0 and -1 on bit 1. In matrix
// form Z_hi = Z (x) I and Z_lo = I (x) Z. With this ordering the q = 1
// oscillator reconstructs to diag(0.5, 1.5, 2.5, 3.5).

#include <array>

#include "qdeform/qops.hpp"

namespace qdeform {

struct PauliCoefficients {
  double identity = 0.0;  // d1
  double z_lo = 0.0;      // d2
  double z_hi = 0.0;      // d3
  double zz = 0.0;        // d4
  double x_hi = 0.0;      // d5
  double xz = 0.0;        // d6, coefficient of X_hi Z_lo

  std::array<double, 6> as_array() const {
    return {identity, z_lo, z_hi, zz, x_hi, xz};
  }
  static PauliCoefficients from_array(const std::array<double, 6>& d) {
    return {d[0], d[1], d[2], d[3], d[4], d[5]};
  }

  /// Sum of |d_i|; an upper bound on the spectral norm of the Hamiltonian.
  double norm_bound() const;
};

/// Residual tolerance for membership in the six-string family.
inline constexpr double kSpinFamilyTol = 1e-10;

PauliCoefficients coeffs_h0(double q);
PauliCoefficients coeffs_hho(double q, double gamma);
PauliCoefficients coeffs_hao(double q, double delta);

/// Dispatch on the model (dim = 4).
PauliCoefficients coefficients_for(Model model, double q,
                                   const ModelParams& params);

/// Builds the 4x4 matrix described by the coefficients.
TruncatedOperator reconstruct(const PauliCoefficients& d);

/// Coefficients of all 16 two-qubit Pauli strings, (1/4) Tr(P H).
/// Index is 4*a + b where a labels the high spin and b the low spin, with
/// 0 = I, 1 = X, 2 = Y, 3 = Z. Y-containing entries are the real
/// coefficients of the (Hermitian) strings.
std::array<double, 16> pauli_projections(const TruncatedOperator& h);

/**
 * Projects a 4x4 symmetric matrix onto the six-string family.
 *
 * Throws NotInSpinFamily if any of the ten remaining Pauli strings carries
 * weight above kSpinFamilyTol, or if the reconstruction residual does.
 */
PauliCoefficients pauli_decompose(const TruncatedOperator& h);

}  // namespace qdeform
