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

#include "qdeform/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdeform/error.hpp"

namespace qdeform {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Complex expi(double x) { return std::polar(1.0, x); }

Eigen::Matrix2cd u_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd m;
  m << c, -expi(lambda) * s, expi(phi) * s, expi(phi + lambda) * c;
  return m;
}

bool is_single_target(GateKind k) { return k != GateKind::ZZ; }

}  // namespace

Gate Gate::h(int qubit) {
  Gate g;
  g.kind = GateKind::H;
  g.targets = {qubit, -1};
  return g;
}

Gate Gate::rz(double phi, int qubit) {
  Gate g;
  g.kind = GateKind::RZ;
  g.params = {phi, 0, 0, 0};
  g.targets = {qubit, -1};
  return g;
}

Gate Gate::ry(double theta, int qubit) {
  Gate g;
  g.kind = GateKind::RY;
  g.params = {theta, 0, 0, 0};
  g.targets = {qubit, -1};
  return g;
}

Gate Gate::zz(double phi, int a, int b) {
  Gate g;
  g.kind = GateKind::ZZ;
  g.params = {phi, 0, 0, 0};
  g.targets = {a, b};
  return g;
}

Gate Gate::cx(int control, int target) {
  Gate g;
  g.kind = GateKind::CX;
  g.targets = {target, -1};
  g.control = control;
  return g;
}

Gate Gate::u(double theta, double phi, double lambda, int qubit) {
  Gate g;
  g.kind = GateKind::U;
  g.params = {theta, phi, lambda, 0};
  g.targets = {qubit, -1};
  return g;
}

Gate Gate::gu(double theta, double phi, double lambda, double chi, int qubit) {
  Gate g;
  g.kind = GateKind::GU;
  g.params = {theta, phi, lambda, chi};
  g.targets = {qubit, -1};
  return g;
}

Gate Gate::controlled_by(int control_qubit) const {
  if (!is_single_target(kind) || kind == GateKind::CX || control) {
    throw std::invalid_argument("controlled_by: gate cannot take a control");
  }
  Gate g = *this;
  g.control = control_qubit;
  return g;
}

int Gate::num_params() const {
  switch (kind) {
    case GateKind::H:
    case GateKind::CX:
      return 0;
    case GateKind::RZ:
    case GateKind::RY:
    case GateKind::ZZ:
      return 1;
    case GateKind::U:
      return 3;
    case GateKind::GU:
      return 4;
  }
  return 0;
}

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  const auto& p = g.params;
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      Eigen::Matrix2cd m;
      m << r, r, r, -r;
      return m;
    }
    case GateKind::RZ: {
      Eigen::Matrix2cd m;
      m << expi(-p[0] / 2.0), 0, 0, expi(p[0] / 2.0);
      return m;
    }
    case GateKind::RY: {
      const double c = std::cos(p[0] / 2.0);
      const double s = std::sin(p[0] / 2.0);
      Eigen::Matrix2cd m;
      m << c, -s, s, c;
      return m;
    }
    case GateKind::ZZ: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(0, 0) = m(3, 3) = expi(-p[0] / 2.0);
      m(1, 1) = m(2, 2) = expi(p[0] / 2.0);
      return m;
    }
    case GateKind::CX: {
      Eigen::Matrix2cd m;
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::U:
      return u_matrix(p[0], p[1], p[2]);
    case GateKind::GU:
      return expi(p[3]) * u_matrix(p[0], p[1], p[2]);
  }
  throw std::logic_error("gate_matrix: unknown gate kind");
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("Circuit: qubit count out of range");
  }
}

Circuit& Circuit::add(const Gate& g) {
  auto valid = [&](int q) { return q >= 0 && q < n_qubits_; };
  const int nt = g.num_targets();
  for (int k = 0; k < nt; ++k) {
    if (!valid(g.targets[k])) {
      throw std::invalid_argument("Circuit::add: target qubit out of range");
    }
  }
  if (nt == 2 && g.targets[0] == g.targets[1]) {
    throw std::invalid_argument("Circuit::add: repeated target qubit");
  }
  if (g.kind == GateKind::CX && !g.control) {
    throw std::invalid_argument("Circuit::add: CX needs a control qubit");
  }
  if (g.control) {
    if (!valid(*g.control)) {
      throw std::invalid_argument("Circuit::add: control qubit out of range");
    }
    if (nt != 1 || *g.control == g.targets[0]) {
      throw std::invalid_argument("Circuit::add: invalid control qubit");
    }
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) {
    throw std::invalid_argument("Circuit::append: too many qubits");
  }
  for (const auto& g : other.gates_) add(g);
  return *this;
}

namespace {

Eigen::MatrixXcd embed(const Gate& g, int n_qubits) {
  const Eigen::MatrixXcd local = gate_matrix(g);
  const int nt = g.num_targets();
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;

  std::size_t target_mask = 0;
  for (int k = 0; k < nt; ++k) target_mask |= std::size_t{1} << g.targets[k];
  auto local_index = [&](std::size_t basis) {
    int idx = 0;
    for (int k = 0; k < nt; ++k) idx |= ((basis >> g.targets[k]) & 1U) << k;
    return idx;
  };

  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto c = static_cast<std::size_t>(col);
    if (g.control && ((c >> *g.control) & 1U) == 0) {
      full(col, col) = 1.0;
      continue;
    }
    for (Eigen::Index row = 0; row < dim; ++row) {
      const auto r = static_cast<std::size_t>(row);
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      full(row, col) = local(local_index(r), local_index(c));
    }
  }
  return full;
}

}  // namespace

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : c.gates()) u = embed(g, c.n_qubits()) * u;
  return u;
}

double max_deviation_up_to_phase(const Eigen::MatrixXcd& a,
                                 const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_deviation_up_to_phase: shape mismatch");
  }
  const Complex overlap = (a.adjoint() * b).trace();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (phase * a - b).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------

const BranchAngles& ProtocolAngles::branch(Branch b) const {
  const auto& v = b == Branch::Plus ? plus : minus;
  if (!v) {
    throw DegenerateBlock(b == Branch::Plus
                              ? "protocol block (+) has zero rotation rate"
                              : "protocol block (-) has zero rotation rate");
  }
  return *v;
}

namespace {

std::optional<BranchAngles> branch_angles(double a, double b, double t,
                                          double scale) {
  BranchAngles out;
  out.j = std::hypot(a, b);
  if (out.j <= 1e-14 * std::max(1.0, scale)) return std::nullopt;
  out.alpha = a / out.j;
  out.beta = b / out.j;
  out.rotation = out.j * t;
  // GU(theta, lambda + pi, lambda, pi/2 - lambda) has (0,0) entry
  // i e^{-i lambda} cos(theta/2); matching cos J - i alpha sin J fixes lambda
  // including the quadrant of J.
  out.lambda = kPi / 2.0 + std::atan2(out.alpha * std::sin(out.rotation),
                                      std::cos(out.rotation));
  out.phi = out.lambda + kPi;
  out.chi = -out.lambda + kPi / 2.0;
  const double s = std::clamp(out.beta * std::sin(out.rotation), -1.0, 1.0);
  out.theta = 2.0 * std::asin(s);
  return out;
}

}  // namespace

ProtocolAngles protocol_angles(const PauliCoefficients& d, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("protocol_angles: t");
  for (double v : d.as_array()) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("protocol_angles: non-finite coefficient");
    }
  }
  ProtocolAngles out;
  out.t = t;
  out.phi1 = 2.0 * d.identity * t;
  out.phi2 = 2.0 * d.z_lo * t;
  const double scale = d.norm_bound();
  out.plus = branch_angles(d.z_hi + d.zz, d.x_hi + d.xz, t, scale);
  out.minus = branch_angles(d.z_hi - d.zz, d.x_hi - d.xz, t, scale);
  return out;
}

Circuit build_evolution_block(const ProtocolAngles& angles) {
  constexpr int p0 = kProbeQubit;
  constexpr int lo = kLowSpinQubit;
  constexpr int hi = kHighSpinQubit;

  // Conditioned on (Z_0, Z_lo) = (z, s) the high spin must see V_s^z with
  // V_s = GU(theta_s, phi_s, lambda_s, chi_s). Negating phi, lambda and chi
  // gives the complex conjugate, which is V_s^dagger because Z and X are
  // real. Between the CX pair q1 holds the parity of q0 and q1, so the
  // branches multiply out to
  //   (z,s) = (+,+): V+          (+,-): V- V+^dag V+
  //           (-,+): V-^dag V- V+^dag V+^dag V+
  //           (-,-): V-^dag V+^dag V+.
  Circuit c(kProtocolQubits);
  c.add(Gate::rz(angles.phi1, p0));
  if (angles.plus) {
    const auto& a = *angles.plus;
    c.add(Gate::u(a.theta, a.phi, a.lambda, hi));
  }
  c.add(Gate::zz(angles.phi2, p0, lo));

  const auto conj_gate = [&](const BranchAngles& a) {
    return Gate::gu(a.theta, -a.phi, -a.lambda, -a.chi, hi);
  };
  if (angles.plus) c.add(conj_gate(*angles.plus).controlled_by(p0));
  if (angles.plus || angles.minus) {
    c.add(Gate::cx(p0, lo));
    if (angles.plus) c.add(conj_gate(*angles.plus).controlled_by(lo));
    if (angles.minus) {
      const auto& m = *angles.minus;
      c.add(Gate::gu(m.theta, m.phi, m.lambda, m.chi, hi).controlled_by(lo));
    }
    c.add(Gate::cx(p0, lo));
  }
  if (angles.minus) c.add(conj_gate(*angles.minus).controlled_by(p0));
  return c;
}

Circuit build_protocol_circuit(const ProtocolAngles& angles) {
  Circuit c(kProtocolQubits);
  for (int q = 0; q < kProtocolQubits; ++q) c.add(Gate::h(q));
  c.append(build_evolution_block(angles));
  c.add(Gate::ry(-kPi / 2.0, kProbeQubit));
  return c;
}

}  // namespace qdeform
