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

// q-number arithmetic and truncated-Fock-space operators of the q-deformed
// oscillator. Units: hbar = m = omega = 1 throughout, so energies come out
// in units of hbar*omega.

#include <Eigen/Dense>

#include <string_view>
#include <utility>

namespace qdeform {

/// Default truncation: four Fock levels, i.e. two qubits.
inline constexpr int kQubitDim = 4;

/**
 * The q-number [n]_q = 1 + q + ... + q^(n-1).
 *
 * Evaluated as a finite geometric sum, so q = 1 needs no limit and
 * [n]_1 = n exactly. Throws std::invalid_argument for n < 0 or q <= 0.
 */
double q_number(int n, double q);

/// Deformation parameter q > 0 and its equivalent alpha = (q-1)/(q+1).
class DeformationParams {
 public:
  explicit DeformationParams(double q);
  static DeformationParams from_alpha(double alpha);

  double q() const { return q_; }
  double alpha() const { return (q_ - 1.0) / (q_ + 1.0); }

 private:
  double q_;
};

/// Perturbation strengths. gamma multiplies X^2/2, delta multiplies X^4.
struct ModelParams {
  double gamma = 0.0;
  double delta = 0.0;

  /// Coefficient of the H0 rescaling for the quadratic model; equals
  /// gamma / (2 m omega^2) with m = omega = 1.
  double gamma_tilde() const { return gamma / 2.0; }
};

/// A real dim x dim matrix in the truncated Fock basis |0>, ..., |dim-1>.
class TruncatedOperator {
 public:
  explicit TruncatedOperator(Eigen::MatrixXd entries);
  static TruncatedOperator zero(int dim);
  static TruncatedOperator identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  double operator()(int row, int col) const { return entries_(row, col); }
  const Eigen::MatrixXd& matrix() const { return entries_; }

  bool is_symmetric(double tol = 1e-12) const;
  bool is_diagonal(double tol = 0.0) const;

  TruncatedOperator transpose() const {
    return TruncatedOperator(entries_.transpose());
  }
  TruncatedOperator& operator+=(const TruncatedOperator& other);
  friend TruncatedOperator operator+(TruncatedOperator a,
                                     const TruncatedOperator& b) {
    a += b;
    return a;
  }
  friend TruncatedOperator operator*(double s, const TruncatedOperator& a) {
    return TruncatedOperator(s * a.entries_);
  }
  friend TruncatedOperator operator*(const TruncatedOperator& a,
                                     const TruncatedOperator& b);

 private:
  Eigen::MatrixXd entries_;
};

/// Returns (b, b^+) with b|n> = sqrt([n]_q)|n-1>. Throws for dim < 2.
std::pair<TruncatedOperator, TruncatedOperator> build_ladder(int dim,
                                                             double q);

enum class PowerKind { X2, P2, X4 };
PowerKind parse_power_kind(std::string_view name);

/**
 * X^2, P^2 or X^4 restricted to the lowest `dim` levels.
 *
 * The product is formed in a padded space (dim+1 for squares, dim+2 for the
 * quartic) and the top-left dim x dim block is returned, so every entry
 * equals the corresponding entry of the untruncated operator. A product of
 * already-truncated matrices would be wrong in the last one or two diagonal
 * entries.
 */
TruncatedOperator build_padded_power(PowerKind kind, int dim, double q);

enum class Model { H0, HO, AO };
Model parse_model(std::string_view name);
std::string_view model_name(Model m);

/**
 * H0 = ([2]_q / 4) diag([n]_q + [n+1]_q),
 * HO = H0 + (gamma/2) X^2,
 * AO = H0 + delta X^4.
 *
 * Throws std::invalid_argument for negative gamma or delta.
 */
TruncatedOperator build_hamiltonian(Model model, int dim, double q,
                                    const ModelParams& params);

}  // namespace qdeform
