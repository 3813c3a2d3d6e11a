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

#include "qdeform/simulator.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qdeform {

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
  if (n_qubits < 1 || n_qubits > 24) {
    throw std::invalid_argument("StateVector: qubit count out of range");
  }
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 24 ||
      amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^n");
  }
  if (std::abs(norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }
}

StateVector StateVector::plus(int n_qubits) {
  StateVector s(n_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
  for (auto& x : s.amps_) x = a;
  return s;
}

void StateVector::apply_single(const Eigen::Matrix2cd& m, int target,
                               std::optional<int> control) {
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t cbit = control ? std::size_t{1} << *control : 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & tbit) continue;
    if (control && !(i & cbit)) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | tbit];
    amps_[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amps_[i | tbit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void StateVector::apply_diagonal_pair(const Eigen::Matrix4cd& m, int a, int b) {
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const auto local = ((i >> a) & 1U) | (((i >> b) & 1U) << 1);
    amps_[i] *= m(local, local);
  }
}

void StateVector::apply(const Gate& g) {
  const auto check = [&](int q) {
    if (q < 0 || q >= n_qubits_) {
      throw std::invalid_argument("StateVector::apply: qubit out of range");
    }
  };
  check(g.targets[0]);
  if (g.control) check(*g.control);
  if (g.kind == GateKind::ZZ) {
    check(g.targets[1]);
    apply_diagonal_pair(gate_matrix(g), g.targets[0], g.targets[1]);
  } else {
    apply_single(gate_matrix(g), g.targets[0], g.control);
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::probability_zero(int qubit) const {
  const std::size_t bit = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & bit)) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::expectation_z(int qubit) const {
  return 2.0 * probability_zero(qubit) - norm() * norm();
}

StateVector run_circuit(const Circuit& c, StateVector initial) {
  if (c.n_qubits() != initial.n_qubits()) {
    throw std::invalid_argument("run_circuit: qubit count mismatch");
  }
  for (const auto& g : c.gates()) initial.apply(g);
  return initial;
}

MeasurementConfig MeasurementConfig::sampled(std::uint64_t shots,
                                             std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shot count must be positive");
  return {Mode::Shots, shots, seed};
}

double probe_expectation(const PauliCoefficients& d, double t,
                         const MeasurementConfig& cfg) {
  const Circuit circuit = build_protocol_circuit(protocol_angles(d, t));
  const StateVector out = run_circuit(circuit, StateVector(kProtocolQubits));
  if (cfg.mode == MeasurementConfig::Mode::Exact) {
    return out.expectation_z(kProbeQubit);
  }

  const double p0 = std::clamp(out.probability_zero(kProbeQubit), 0.0, 1.0);
  const auto tbits = std::bit_cast<std::uint64_t>(t);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                    static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(tbits),
                    static_cast<std::uint32_t>(tbits >> 32)};
  std::mt19937_64 rng(seq);
  std::binomial_distribution<std::uint64_t> draw(cfg.shots, p0);
  const auto n0 = static_cast<double>(draw(rng));
  const auto s = static_cast<double>(cfg.shots);
  return (n0 - (s - n0)) / s;
}

namespace {

struct ProbeEigensystem {
  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd overlaps;  // V^T |+...+>
};

ProbeEigensystem probe_eigensystem(const TruncatedOperator& h) {
  if (!std::has_single_bit(static_cast<unsigned>(h.dim()))) {
    throw std::invalid_argument("evolve_exact: dimension must be a power of two");
  }
  if (!h.is_symmetric(1e-12)) {
    throw std::invalid_argument("evolve_exact: Hamiltonian must be symmetric");
  }
  const Eigen::MatrixXd ht = probe_hamiltonian(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ht);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("evolve_exact: eigensolver failed");
  }
  const auto dim = ht.rows();
  const Eigen::VectorXd psi0 =
      Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return {solver.eigenvalues(), solver.eigenvectors(),
          solver.eigenvectors().transpose() * psi0};
}

}  // namespace

Eigen::MatrixXd probe_hamiltonian(const TruncatedOperator& h) {
  const auto n = h.dim();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out(2 * r, 2 * c) = h(r, c);
      out(2 * r + 1, 2 * c + 1) = -h(r, c);
    }
  }
  return out;
}

double evolve_exact(const TruncatedOperator& h, double t) {
  const auto es = probe_eigensystem(h);
  const Eigen::VectorXcd phases =
      (es.energies.cast<std::complex<double>>() * std::complex<double>(0, -t))
          .array()
          .exp();
  const Eigen::VectorXcd psi =
      es.vectors.cast<std::complex<double>>() *
      (phases.array() * es.overlaps.cast<std::complex<double>>().array())
          .matrix();
  // X on the probe (bit 0) swaps neighbouring amplitudes.
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    acc += std::conj(psi[i]) * psi[i ^ 1];
  }
  return acc.real();
}

std::complex<double> spectral_sum(const TruncatedOperator& h, double t) {
  const auto es = probe_eigensystem(h);
  std::complex<double> acc = 0.0;
  for (Eigen::Index k = 0; k < es.energies.size(); ++k) {
    const double w = es.overlaps[k] * es.overlaps[k];
    acc += w * std::polar(1.0, -2.0 * es.energies[k] * t);
  }
  return acc;
}

}  // namespace qdeform
