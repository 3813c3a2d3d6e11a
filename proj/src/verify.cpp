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

#include "qdeform/verify.hpp"

#include <fmt/format.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <random>

#include "qdeform/circuit.hpp"
#include "qdeform/experiment.hpp"
#include "qdeform/simulator.hpp"
#include "qdeform/spinmap.hpp"

namespace qdeform {

Eigen::MatrixXcd evolution_oracle(const TruncatedOperator& h, double t) {
  const Eigen::MatrixXcd ht = probe_hamiltonian(h).cast<std::complex<double>>();
  const Eigen::MatrixXcd generator = std::complex<double>(0.0, -t) * ht;
  return generator.exp();
}

std::string ModelPoint::label() const {
  switch (model) {
    case Model::H0:
      return "h0";
    case Model::HO:
      return fmt::format("ho(gamma={})", params.gamma);
    case Model::AO:
      return fmt::format("ao(delta={})", params.delta);
  }
  return "?";
}

std::vector<ModelPoint> standard_models() {
  return {
      {Model::H0, {}},
      {Model::HO, {0.1, 0.0}},
      {Model::HO, {0.5, 0.0}},
      {Model::HO, {1.0, 0.0}},
      {Model::AO, {0.0, 0.1}},
      {Model::AO, {0.0, 0.5}},
  };
}

std::vector<double> standard_q_values() { return {0.5, 0.8, 1.0, 1.2, 1.5, 2.0}; }
std::vector<double> standard_times() { return {0.1, 0.7, 1.3}; }

bool VerifyReport::passed() const {
  return !suites.empty() &&
         std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

namespace {

void record(SuiteResult& s, double deviation, const std::string& where) {
  ++s.cases;
  s.max_deviation = std::max(s.max_deviation, deviation);
  if (!(deviation <= s.tolerance)) {
    if (s.failures == 0) s.first_failure = where;
    ++s.failures;
  }
}

}  // namespace

SuiteResult verify_circuit_exactness() {
  SuiteResult s{"circuit vs exponential", 0, 0, 0.0, 1e-9, {}};
  for (const auto& m : standard_models()) {
    for (double q : standard_q_values()) {
      const auto h = build_hamiltonian(m.model, kQubitDim, q, m.params);
      const auto d = coefficients_for(m.model, q, m.params);
      for (double t : standard_times()) {
        const auto u = circuit_unitary(build_evolution_block(protocol_angles(d, t)));
        record(s, max_deviation_up_to_phase(u, evolution_oracle(h, t)),
               fmt::format("{} q={} t={}", m.label(), q, t));
      }
    }
  }
  return s;
}

SuiteResult verify_pauli_round_trip() {
  SuiteResult s{"pauli round trip", 0, 0, 0.0, 1e-12, {}};
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 6> v{};
    for (double& x : v) x = coef(rng);
    const auto back = pauli_decompose(reconstruct(PauliCoefficients::from_array(v))).as_array();
    double dev = 0.0;
    for (std::size_t k = 0; k < 6; ++k) dev = std::max(dev, std::abs(back[k] - v[k]));
    record(s, dev, fmt::format("random vector #{}", i));
  }
  return s;
}

SuiteResult verify_closed_form_coefficients() {
  SuiteResult s{"closed-form coefficients", 0, 0, 0.0, 1e-10, {}};
  for (const auto& m : standard_models()) {
    for (double q : standard_q_values()) {
      const auto closed = coefficients_for(m.model, q, m.params).as_array();
      const auto projected =
          pauli_decompose(build_hamiltonian(m.model, kQubitDim, q, m.params)).as_array();
      double dev = 0.0;
      for (std::size_t k = 0; k < 6; ++k) {
        dev = std::max(dev, std::abs(closed[k] - projected[k]));
      }
      record(s, dev, fmt::format("{} q={}", m.label(), q));
    }
  }
  return s;
}

SuiteResult verify_probe_vs_exact() {
  SuiteResult s{"probe vs exact evolution", 0, 0, 0.0, 1e-8, {}};
  for (const auto& m : standard_models()) {
    for (double q : standard_q_values()) {
      const auto h = build_hamiltonian(m.model, kQubitDim, q, m.params);
      const auto d = coefficients_for(m.model, q, m.params);
      for (double t : standard_times()) {
        const double dev = std::abs(
            probe_expectation(d, t, MeasurementConfig::exact()) - evolve_exact(h, t));
        record(s, dev, fmt::format("{} q={} t={}", m.label(), q, t));
      }
    }
  }
  return s;
}

SuiteResult verify_detected_levels() {
  // Tolerance is per point (one half-bin); the recorded deviation is the
  // error in units of that half-bin, so the suite tolerance is 1.
  SuiteResult s{"detected vs diagonalized levels (half-bins)", 0, 0, 0.0, 1.0, {}};
  for (const auto& m : standard_models()) {
    for (double q : {0.5, 1.0, 2.0}) {
      ExperimentConfig cfg;
      cfg.model = m.model;
      cfg.gamma = m.params.gamma;
      cfg.delta = m.params.delta;
      const auto where = fmt::format("{} q={}", m.label(), q);
      try {
        const PointResult r = run_point(cfg, q);
        record(s, r.max_error / r.half_bin, where);
      } catch (const Error& e) {
        record(s, INFINITY, where + ": " + e.what());
      }
    }
  }
  return s;
}

VerifyReport run_verify() {
  VerifyReport r;
  r.suites.push_back(verify_circuit_exactness());
  r.suites.push_back(verify_pauli_round_trip());
  r.suites.push_back(verify_closed_form_coefficients());
  r.suites.push_back(verify_probe_vs_exact());
  r.suites.push_back(verify_detected_levels());
  return r;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  out << fmt::format("{:<46} {:>6} {:>6} {:>12} {:>10}  {}\n", "suite", "cases",
                     "fail", "max dev", "tol", "status");
  for (const auto& s : report.suites) {
    out << fmt::format("{:<46} {:>6} {:>6} {:>12.3e} {:>10.1e}  {}\n", s.name,
                       s.cases, s.failures, s.max_deviation, s.tolerance,
                       s.passed() ? "PASS" : "FAIL");
    if (!s.passed() && !s.first_failure.empty()) {
      out << "    first failure: " << s.first_failure << '\n';
    }
  }
  out << (report.passed() ? "all suites passed\n" : "verification FAILED\n");
}

}  // namespace qdeform
