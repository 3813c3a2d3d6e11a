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

#include "qdeform/spinmap.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

void expect_coeffs_near(const PauliCoefficients& a, const PauliCoefficients& b,
                        double tol) {
  const auto x = a.as_array();
  const auto y = b.as_array();
  for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(x[k], y[k], tol) << "d" << k + 1;
}

TEST(Coefficients, FreeUndeformed) {
  const auto d = coeffs_h0(1.0);
  EXPECT_NEAR(d.identity, 2.0, 1e-15);
  EXPECT_NEAR(d.z_lo, -0.5, 1e-15);
  EXPECT_NEAR(d.z_hi, -1.0, 1e-15);
  EXPECT_EQ(d.zz, 0.0);
  EXPECT_EQ(d.x_hi, 0.0);
  EXPECT_EQ(d.xz, 0.0);
  EXPECT_TRUE(reconstruct(d).matrix().isApprox(
      Eigen::Vector4d(0.5, 1.5, 2.5, 3.5).asDiagonal().toDenseMatrix(), 1e-15));
}

TEST(Coefficients, FreeDeformed) {
  EXPECT_NEAR(coeffs_h0(2.0).z_lo, -2.8125, 1e-14);
}

TEST(Coefficients, QuadraticZeroStrength) {
  expect_coeffs_near(coeffs_hho(1.0, 0.0), coeffs_h0(1.0), 0.0);
}

TEST(Coefficients, QuadraticMixing) {
  const auto d = coeffs_hho(1.0, 1.0);
  EXPECT_NEAR(d.x_hi, 0.5 / 8.0 * std::pow(2.0, 1.5) * (1.0 + std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(d.xz, 0.5 / 8.0 * std::pow(2.0, 1.5) * (1.0 - std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(d.x_hi, 0.48296, 1e-5);
  EXPECT_NEAR(d.xz, -0.12941, 1e-5);
}

TEST(Coefficients, QuarticZeroStrength) {
  for (double q : {0.5, 1.0, 1.7}) {
    expect_coeffs_near(coeffs_hao(q, 0.0), coeffs_h0(q), 1e-15);
  }
}

TEST(Coefficients, QuarticUndeformed) {
  const auto d = coeffs_hao(1.0, 0.1);
  EXPECT_NEAR(d.identity, 2.825, 1e-14);
  const auto expected = build_hamiltonian(Model::H0, 4, 1.0, {}) +
                        0.1 * build_padded_power(PowerKind::X4, 4, 1.0);
  EXPECT_TRUE(reconstruct(d).matrix().isApprox(expected.matrix(), 1e-13));
  EXPECT_LT((reconstruct(d).matrix() - expected.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

// The closed forms are checked against projection of the built matrix,
// never the other way round.
TEST(Coefficients, ClosedFormsMatchProjection) {
  for (double q = 0.5; q <= 2.0 + 1e-9; q += 0.1) {
    for (auto [model, params] : {std::pair{Model::H0, ModelParams{}},
                                 std::pair{Model::HO, ModelParams{0.7, 0.0}},
                                 std::pair{Model::AO, ModelParams{0.0, 0.4}}}) {
      const auto h = build_hamiltonian(model, 4, q, params);
      expect_coeffs_near(coefficients_for(model, q, params), pauli_decompose(h), 1e-10);
    }
  }
}

TEST(Decompose, Identity) {
  const auto d = pauli_decompose(TruncatedOperator::identity(4));
  expect_coeffs_near(d, PauliCoefficients{1.0, 0, 0, 0, 0, 0}, 1e-15);
}

TEST(Decompose, RejectsOutsideFamily) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = m(1, 0) = 0.3;
  try {
    pauli_decompose(TruncatedOperator(m));
    FAIL() << "expected NotInSpinFamily";
  } catch (const NotInSpinFamily& e) {
    EXPECT_GT(e.residual(), kSpinFamilyTol);
  }
}

TEST(Decompose, ProjectionsOfSingleString) {
  // X_hi Z_lo alone projects onto exactly one of the sixteen strings.
  const auto p = pauli_projections(reconstruct({0, 0, 0, 0, 0, 1.0}));
  double total = 0.0;
  for (double v : p) total += std::abs(v);
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_NEAR(p[4 * 1 + 3], 1.0, 1e-15);
}

TEST(Decompose, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    PauliCoefficients d{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    expect_coeffs_near(pauli_decompose(reconstruct(d)), d, 1e-12);
  }
}

TEST(Coefficients, NormBound) {
  EXPECT_NEAR(coeffs_h0(1.0).norm_bound(), 3.5, 1e-15);
}

}  // namespace
}  // namespace qdeform
