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

#include "qdeform/qops.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace qdeform {
namespace {

TEST(QNumber, SmallValues) {
  EXPECT_EQ(q_number(0, 2.0), 0.0);
  EXPECT_EQ(q_number(2, 1.0), 2.0);
  EXPECT_EQ(q_number(3, 2.0), 7.0);
  EXPECT_NEAR(q_number(4, 0.5), 1.875, 1e-15);
}

TEST(QNumber, MatchesClosedFormAwayFromOne) {
  for (double q : {0.3, 0.9, 1.1, 2.5}) {
    for (int n = 0; n < 8; ++n) {
      EXPECT_NEAR(q_number(n, q), (std::pow(q, n) - 1.0) / (q - 1.0), 1e-12);
    }
  }
}

TEST(QNumber, RejectsBadArguments) {
  EXPECT_THROW(q_number(-1, 1.0), std::invalid_argument);
  EXPECT_THROW(q_number(2, 0.0), std::invalid_argument);
}

TEST(Deformation, AlphaRoundTrip) {
  const auto p = DeformationParams::from_alpha(DeformationParams(1.7).alpha());
  EXPECT_NEAR(p.q(), 1.7, 1e-14);
  EXPECT_EQ(DeformationParams(1.0).alpha(), 0.0);
  EXPECT_EQ((ModelParams{0.5, 0.0}.gamma_tilde()), 0.25);
}

TEST(Ladder, UndeformedEntries) {
  const auto [b, bd] = build_ladder(4, 1.0);
  EXPECT_NEAR(b(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(b(1, 2), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b(2, 3), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(b.matrix().cwiseAbs().sum(), 1.0 + std::sqrt(2.0) + std::sqrt(3.0));
  EXPECT_TRUE(bd.matrix().isApprox(b.matrix().transpose()));
}

TEST(Ladder, DeformedEntries) {
  EXPECT_NEAR(build_ladder(4, 2.0).first(2, 3), std::sqrt(7.0), 1e-14);
  const auto b = build_ladder(2, 0.5).first;
  EXPECT_EQ(b(0, 1), 1.0);
  EXPECT_EQ(b(1, 0), 0.0);
  EXPECT_EQ(b(0, 0), 0.0);
}

TEST(Ladder, DeformedCommutator) {
  // b b+ - q b+ b = 1 away from the truncation edge.
  for (double q : {0.5, 1.0, 1.6}) {
    const auto [b, bd] = build_ladder(6, q);
    const Eigen::MatrixXd c =
        b.matrix() * bd.matrix() - q * bd.matrix() * b.matrix();
    for (int n = 0; n < 5; ++n) EXPECT_NEAR(c(n, n), 1.0, 1e-12) << "q=" << q;
  }
}

TEST(Powers, UndeformedX2) {
  const auto x2 = build_padded_power(PowerKind::X2, 4, 1.0);
  EXPECT_NEAR(x2(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(x2(0, 2), std::sqrt(2.0) / 2.0, 1e-15);
  EXPECT_NEAR(x2(3, 3), 3.5, 1e-14);
  EXPECT_TRUE(x2.is_symmetric());
}

TEST(Powers, UndeformedP2) {
  const auto x2 = build_padded_power(PowerKind::X2, 4, 1.0);
  const auto p2 = build_padded_power(PowerKind::P2, 4, 1.0);
  EXPECT_NEAR(p2(0, 2), -std::sqrt(2.0) / 2.0, 1e-15);
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(p2(n, n), x2(n, n), 1e-14);
}

TEST(Powers, UndeformedX4Diagonal) {
  const auto x4 = build_padded_power(PowerKind::X4, 4, 1.0);
  const double expected[] = {0.75, 3.75, 9.75, 18.75};
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(x4(n, n), expected[n], 1e-13);
}

TEST(Powers, PaddingMatchesLargeSpace) {
  for (double q : {0.6, 1.3}) {
    for (auto kind : {PowerKind::X2, PowerKind::P2, PowerKind::X4}) {
      const auto small = build_padded_power(kind, 4, q);
      const auto big = build_padded_power(kind, 10, q);
      EXPECT_TRUE(small.matrix().isApprox(big.matrix().topLeftCorner(4, 4), 1e-13));
    }
  }
}

TEST(Powers, ParityStructure) {
  const auto x4 = build_padded_power(PowerKind::X4, 4, 1.4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if ((r + c) % 2 == 1) EXPECT_EQ(x4(r, c), 0.0);
    }
  }
}

TEST(Hamiltonian, FreeOscillator) {
  EXPECT_TRUE(build_hamiltonian(Model::H0, 4, 1.0, {}).matrix().isApprox(
      Eigen::Vector4d(0.5, 1.5, 2.5, 3.5).asDiagonal().toDenseMatrix()));
  EXPECT_TRUE(build_hamiltonian(Model::H0, 4, 2.0, {}).matrix().isApprox(
      Eigen::Vector4d(0.75, 3.0, 7.5, 16.5).asDiagonal().toDenseMatrix()));
}

TEST(Hamiltonian, ZeroPerturbationIsFree) {
  for (double q : {0.5, 1.0, 1.9}) {
    const auto h0 = build_hamiltonian(Model::H0, 4, q, {});
    EXPECT_EQ(build_hamiltonian(Model::AO, 4, q, {}).matrix(), h0.matrix());
    EXPECT_EQ(build_hamiltonian(Model::HO, 4, q, {}).matrix(), h0.matrix());
  }
}

TEST(Hamiltonian, QuadraticEqualsRescaledFreeAtOneQ) {
  // At q = 1, H0 + (g/2) X^2 has diagonal (1 + g/2)(n + 1/2).
  const auto h = build_hamiltonian(Model::HO, 4, 1.0, {1.0, 0.0});
  for (int n = 0; n < 3; ++n) EXPECT_NEAR(h(n, n), 1.5 * (n + 0.5), 1e-14);
}

TEST(Hamiltonian, RejectsNegativeStrength) {
  EXPECT_THROW(build_hamiltonian(Model::HO, 4, 1.0, {-0.1, 0.0}),
               std::invalid_argument);
  EXPECT_THROW(build_hamiltonian(Model::AO, 4, 1.0, {0.0, -0.1}),
               std::invalid_argument);
}

TEST(Names, ParseModel) {
  EXPECT_EQ(parse_model("ao"), Model::AO);
  EXPECT_EQ(parse_model("HO"), Model::HO);
  EXPECT_EQ(model_name(Model::H0), "h0");
  EXPECT_THROW(parse_model("xx"), std::invalid_argument);
  EXPECT_EQ(parse_power_kind("X4"), PowerKind::X4);
}

}  // namespace
}  // namespace qdeform
