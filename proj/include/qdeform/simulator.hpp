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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qdeform/circuit.hpp"
#include "qdeform/qops.hpp"
#include "qdeform/spinmap.hpp"

namespace qdeform {

using Amplitude = std::complex<double>;

/// 2^n amplitudes, qubit k stored in bit k of the index. Owned by a single
/// run at a time; distinct instances are independent.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<Amplitude> amplitudes);
  /// |+...+>
  static StateVector plus(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  void apply(const Gate& g);
  double norm() const;
  double probability_zero(int qubit) const;
  /// <Z_qubit> = P(0) - P(1)
  double expectation_z(int qubit) const;

 private:
  void apply_single(const Eigen::Matrix2cd& m, int target,
                    std::optional<int> control);
  void apply_diagonal_pair(const Eigen::Matrix4cd& m, int a, int b);

  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Applies the gates one at a time; throws std::invalid_argument on a
/// qubit-count mismatch.
StateVector run_circuit(const Circuit& c, StateVector initial);

struct MeasurementConfig {
  enum class Mode { Exact, Shots };
  Mode mode = Mode::Exact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  static MeasurementConfig exact() { return {}; }
  static MeasurementConfig sampled(std::uint64_t shots, std::uint64_t seed);

  friend bool operator==(const MeasurementConfig&,
                         const MeasurementConfig&) = default;
};

/**
 * <sigma_x of the probe> at time t, from the compiled protocol.
 *
 * Exact mode returns <Z_0> after the final RY(-pi/2). Shot mode draws
 * `shots` single-qubit readouts of q0 and returns (N0 - N1) / shots. The
 * random stream is keyed on (seed, t), so a given sample is reproducible
 * regardless of evaluation order or thread.
 */
double probe_expectation(const PauliCoefficients& d, double t,
                         const MeasurementConfig& cfg);

/**
 * Reference value of <sigma_x of the probe>(t) for H_T = Z_0 (x) H, from an
 * eigendecomposition of H_T: psi(t) = V e^{-i E t} V^T |+...+>, then
 * <psi(t)| X_0 |psi(t)>. H must be symmetric with power-of-two dimension.
 */
double evolve_exact(const TruncatedOperator& h, double t);

/**
 * sum_k |<+...+|v_k>|^2 e^{-2 i E_k t} over the eigenpairs of H_T. Equal to
 * evolve_exact when X_0 anticommutes with H_T; its imaginary part vanishes
 * because the spectrum of H_T is symmetric about zero.
 */
std::complex<double> spectral_sum(const TruncatedOperator& h, double t);

/// The probe Hamiltonian Z_0 H as a dense matrix, kron(H, Z).
Eigen::MatrixXd probe_hamiltonian(const TruncatedOperator& h);

}  // namespace qdeform
