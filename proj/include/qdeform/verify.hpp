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

#include <iosfwd>
#include <string>
#include <vector>

#include "qdeform/qops.hpp"

namespace qdeform {

/// exp(-i t Z_0 H) for the probe Hamiltonian, via Eigen's matrix exponential.
Eigen::MatrixXcd evolution_oracle(const TruncatedOperator& h, double t);

struct ModelPoint {
  Model model = Model::H0;
  ModelParams params;
  std::string label() const;
};

/// h0; ho with gamma 0.1, 0.5, 1.0; ao with delta 0.1, 0.5.
std::vector<ModelPoint> standard_models();
/// 0.5, 0.8, 1.0, 1.2, 1.5, 2.0
std::vector<double> standard_q_values();
/// 0.1, 0.7, 1.3
std::vector<double> standard_times();

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

SuiteResult verify_circuit_exactness();
SuiteResult verify_pauli_round_trip();
SuiteResult verify_closed_form_coefficients();
SuiteResult verify_probe_vs_exact();
SuiteResult verify_detected_levels();

VerifyReport run_verify();
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace qdeform
