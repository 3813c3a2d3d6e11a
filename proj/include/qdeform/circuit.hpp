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

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/spinmap.hpp"

namespace qdeform {

/**
 * Gate set. Conventions:
 *
 *   RZ(p)        = diag(e^{-ip/2}, e^{ip/2})
 *   RY(t)        = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
 *   ZZ(p)        = diag(e^{-ip/2}, e^{ip/2}, e^{ip/2}, e^{-ip/2})
 *   U(t, p, l)   = [[cos t/2, -e^{il} sin t/2],
 *                   [e^{ip} sin t/2, e^{i(p+l)} cos t/2]]
 *   GU(t,p,l,c)  = e^{ic} U(t, p, l)
 *
 * CX is controlled-X. Any single-target gate may additionally carry a
 * control qubit; its global phase then becomes a relative phase.
 */
enum class GateKind { H, RZ, RY, ZZ, CX, U, GU };

struct Gate {
  GateKind kind = GateKind::H;
  std::array<double, 4> params{};
  /// ZZ uses both entries; every other kind uses targets[0] only.
  std::array<int, 2> targets{-1, -1};
  std::optional<int> control;

  static Gate h(int qubit);
  static Gate rz(double phi, int qubit);
  static Gate ry(double theta, int qubit);
  static Gate zz(double phi, int a, int b);
  static Gate cx(int control, int target);
  static Gate u(double theta, double phi, double lambda, int qubit);
  static Gate gu(double theta, double phi, double lambda, double chi,
                 int qubit);

  /// Copy of a single-target gate with a control attached.
  Gate controlled_by(int control_qubit) const;

  int num_params() const;
  int num_targets() const { return kind == GateKind::ZZ ? 2 : 1; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Matrix on the gate's own targets (2x2, or 4x4 for ZZ with local index
/// bit(targets[0]) + 2 bit(targets[1])). A control is not included; CX
/// yields the X matrix.
Eigen::MatrixXcd gate_matrix(const Gate& g);

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  /// Validates qubit indices and appends.
  Circuit& add(const Gate& g);
  Circuit& append(const Circuit& other);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

/**
 * Full 2^n x 2^n unitary, gates applied in list order.
 *
 * Basis index i has qubit k in bit k (qubit 0 is least significant). Each
 * gate is embedded as an explicit dense matrix, independently of the
 * in-place kernels used by the state-vector simulator.
 */
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// Max-entry distance between e^{ic} a and b, with c chosen from
/// tr(a^dagger b). Zero iff a and b agree up to a global phase.
double max_deviation_up_to_phase(const Eigen::MatrixXcd& a,
                                 const Eigen::MatrixXcd& b);

// Line-oriented text form, one gate per line, e.g.
//
//   qubits 3
//   h q0
//   rz 0.75 q0
//   zz -0.25 q0 q1
//   cgu 0.1 -3.0 -1.4 -0.2 q0 q2
//   cx q0 q1
//
// Controlled single-target gates carry a "c" prefix and list the control
// qubit first. Numbers are written in shortest round-trip form.
std::string to_text(const Circuit& c);
Circuit parse_circuit(std::string_view text);

// ---------------------------------------------------------------------------
// Probe-spin evolution protocol.
//
// Qubit roles: q0 is the probe, q1 carries the low spin (Z-only couplings),
// q2 the high spin (the one flipped by X_hi). The two-spin Hamiltonian acts
// on (q2, q1) with q2 as the more significant bit, so as a matrix the probe
// Hamiltonian Z_0 H is kron(H, Z).

inline constexpr int kProbeQubit = 0;
inline constexpr int kLowSpinQubit = 1;
inline constexpr int kHighSpinQubit = 2;
inline constexpr int kProtocolQubits = 3;

enum class Branch { Plus, Minus };

/// Angles of one Z_lo = +1 / -1 conditional block. With
///   a = d3 +/- d4, b = d5 +/- d6, j = sqrt(a^2 + b^2),
/// the block evolution exp(-i t (a Z + b X)) equals GU(theta, phi, lambda, chi).
struct BranchAngles {
  double j = 0.0;
  double alpha = 0.0;  // a / j
  double beta = 0.0;   // b / j
  double rotation = 0.0;  // J = j t
  double lambda = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  double chi = 0.0;
};

struct ProtocolAngles {
  double t = 0.0;
  double phi1 = 0.0;  // 2 d1 t
  double phi2 = 0.0;  // 2 d2 t
  /// Empty when the block's rotation rate vanishes (identity evolution).
  std::optional<BranchAngles> plus;
  std::optional<BranchAngles> minus;

  /// Throws DegenerateBlock for an empty branch.
  const BranchAngles& branch(Branch b) const;
};

ProtocolAngles protocol_angles(const PauliCoefficients& d, double t);

/// The evolution exp(-i t Z_0 H) as a 3-qubit circuit (no state
/// preparation or readout). Exact up to a global phase.
Circuit build_evolution_block(const ProtocolAngles& angles);

/// Hadamards on all qubits, the evolution block, then RY(-pi/2) on the probe.
Circuit build_protocol_circuit(const ProtocolAngles& angles);

}  // namespace qdeform
