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

#include <fmt/format.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qdeform/error.hpp"

namespace qdeform {

namespace {

using Complex = std::complex<double>;

Eigen::Matrix2cd pauli(int which) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (which) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -i, i, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& hi, const Eigen::Matrix2cd& lo) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.block<2, 2>(2 * r, 2 * c) = hi(r, c) * lo;
    }
  }
  return out;
}

constexpr int kI = 0;
constexpr int kX = 1;
constexpr int kZ = 3;

constexpr int string_index(int hi, int lo) { return 4 * hi + lo; }

void require_q(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be > 0");
}

}  // namespace

double PauliCoefficients::norm_bound() const {
  double s = 0.0;
  for (double v : as_array()) s += std::abs(v);
  return s;
}

PauliCoefficients coeffs_h0(double q) {
  require_q(q);
  const double n2 = q_number(2, q);
  const double n3 = q_number(3, q);
  const double n4 = q_number(4, q);
  PauliCoefficients c;
  c.identity = n2 * (2.0 + 2.0 * n2 + 2.0 * n3 + n4) / 16.0;
  c.z_lo = -n2 * n4 / 16.0;
  c.z_hi = -std::pow(n2, 4) / 16.0;
  c.zz = n2 * (n4 - 2.0 * n2) / 16.0;
  return c;
}

PauliCoefficients coeffs_hho(double q, double gamma) {
  require_q(q);
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  const double gt = ModelParams{gamma, 0.0}.gamma_tilde();
  const double n2 = q_number(2, q);
  const double n3 = q_number(3, q);

  PauliCoefficients d = coeffs_h0(q);
  d.identity *= 1.0 + gt;
  d.z_lo *= 1.0 + gt;
  d.z_hi *= 1.0 + gt;
  d.zz *= 1.0 + gt;
  d.x_hi = gt / 8.0 * std::pow(n2, 1.5) * (1.0 + std::sqrt(n3));
  d.xz = gt / 8.0 * std::pow(n2, 1.5) * (1.0 - std::sqrt(n3));
  return d;
}

PauliCoefficients coeffs_hao(double q, double delta) {
  require_q(q);
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  const TruncatedOperator x4 = build_padded_power(PowerKind::X4, kQubitDim, q);
  // A_ij with 1-based labels as in the usual matrix-element notation.
  auto a = [&](int i, int j) { return x4(i - 1, j - 1); };

  // The identity term carries delta like the other five; every term of
  // delta X^4 must.
  PauliCoefficients d = coeffs_h0(q);
  d.identity += delta / 4.0 * (a(1, 1) + a(2, 2) + a(3, 3) + a(4, 4));
  d.z_lo += delta / 4.0 * (a(1, 1) - a(2, 2) + a(3, 3) - a(4, 4));
  d.z_hi += delta / 4.0 * (a(1, 1) + a(2, 2) - a(3, 3) - a(4, 4));
  d.zz += delta / 4.0 * (a(1, 1) - a(2, 2) - a(3, 3) + a(4, 4));
  d.x_hi += delta / 2.0 * (a(1, 3) + a(2, 4));
  d.xz += delta / 2.0 * (a(1, 3) - a(2, 4));
  return d;
}

PauliCoefficients coefficients_for(Model model, double q,
                                   const ModelParams& params) {
  switch (model) {
    case Model::H0:
      return coeffs_h0(q);
    case Model::HO:
      return coeffs_hho(q, params.gamma);
    case Model::AO:
      return coeffs_hao(q, params.delta);
  }
  throw std::invalid_argument("unknown model");
}

TruncatedOperator reconstruct(const PauliCoefficients& d) {
  const Eigen::Matrix4cd m =
      d.identity * kron(pauli(kI), pauli(kI)) +
      d.z_lo * kron(pauli(kI), pauli(kZ)) +
      d.z_hi * kron(pauli(kZ), pauli(kI)) +
      d.zz * kron(pauli(kZ), pauli(kZ)) +
      d.x_hi * kron(pauli(kX), pauli(kI)) +
      d.xz * kron(pauli(kX), pauli(kZ));
  return TruncatedOperator(m.real());
}

std::array<double, 16> pauli_projections(const TruncatedOperator& h) {
  if (h.dim() != 4) {
    throw std::invalid_argument("pauli_projections: expected a 4x4 matrix");
  }
  const Eigen::Matrix4cd hc = h.matrix().cast<Complex>();
  std::array<double, 16> out{};
  for (int hi = 0; hi < 4; ++hi) {
    for (int lo = 0; lo < 4; ++lo) {
      const Complex tr = (kron(pauli(hi), pauli(lo)) * hc).trace();
      out[string_index(hi, lo)] = tr.real() / 4.0;
    }
  }
  return out;
}

PauliCoefficients pauli_decompose(const TruncatedOperator& h) {
  if (h.dim() != 4) {
    throw std::invalid_argument("pauli_decompose: expected a 4x4 matrix");
  }
  if (!h.is_symmetric(kSpinFamilyTol)) {
    throw NotInSpinFamily("pauli_decompose: matrix is not symmetric",
                          (h.matrix() - h.matrix().transpose()).cwiseAbs().maxCoeff());
  }
  const auto p = pauli_projections(h);

  PauliCoefficients d;
  d.identity = p[string_index(kI, kI)];
  d.z_lo = p[string_index(kI, kZ)];
  d.z_hi = p[string_index(kZ, kI)];
  d.zz = p[string_index(kZ, kZ)];
  d.x_hi = p[string_index(kX, kI)];
  d.xz = p[string_index(kX, kZ)];

  const double residual =
      (reconstruct(d).matrix() - h.matrix()).cwiseAbs().maxCoeff();
  if (residual > kSpinFamilyTol) {
    throw NotInSpinFamily(
        fmt::format("pauli_decompose: matrix has support outside the "
                    "six-string family (residual {:.3e})",
                    residual),
        residual);
  }
  return d;
}

}  // namespace qdeform
