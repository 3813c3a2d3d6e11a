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

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdeform {

double q_number(int n, double q) {
  if (n < 0) throw std::invalid_argument("q_number: n must be >= 0");
  if (!(q > 0.0)) throw std::invalid_argument("q_number: q must be > 0");
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= q;
  }
  return sum;
}

DeformationParams::DeformationParams(double q) : q_(q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("DeformationParams: q must be finite and > 0");
  }
}

DeformationParams DeformationParams::from_alpha(double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0)) {
    throw std::invalid_argument("DeformationParams: alpha must lie in (-1, 1)");
  }
  return DeformationParams((1.0 + alpha) / (1.0 - alpha));
}

TruncatedOperator::TruncatedOperator(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("TruncatedOperator: matrix must be square");
  }
}

TruncatedOperator TruncatedOperator::zero(int dim) {
  return TruncatedOperator(Eigen::MatrixXd::Zero(dim, dim));
}

TruncatedOperator TruncatedOperator::identity(int dim) {
  return TruncatedOperator(Eigen::MatrixXd::Identity(dim, dim));
}

bool TruncatedOperator::is_symmetric(double tol) const {
  return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool TruncatedOperator::is_diagonal(double tol) const {
  Eigen::MatrixXd off = entries_;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff() <= tol;
}

TruncatedOperator& TruncatedOperator::operator+=(const TruncatedOperator& other) {
  if (other.dim() != dim()) {
    throw std::invalid_argument("TruncatedOperator: dimension mismatch");
  }
  entries_ += other.entries_;
  return *this;
}

TruncatedOperator operator*(const TruncatedOperator& a,
                            const TruncatedOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("TruncatedOperator: dimension mismatch");
  }
  return TruncatedOperator(a.entries_ * b.entries_);
}

std::pair<TruncatedOperator, TruncatedOperator> build_ladder(int dim,
                                                             double q) {
  if (dim < 2) throw std::invalid_argument("build_ladder: dim must be >= 2");
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) b(n - 1, n) = std::sqrt(q_number(n, q));
  Eigen::MatrixXd bdag = b.transpose();
  return {TruncatedOperator(std::move(b)), TruncatedOperator(std::move(bdag))};
}

PowerKind parse_power_kind(std::string_view name) {
  if (name == "X2") return PowerKind::X2;
  if (name == "P2") return PowerKind::P2;
  if (name == "X4") return PowerKind::X4;
  throw std::invalid_argument("unknown operator power '" + std::string(name) +
                              "' (expected X2, P2 or X4)");
}

TruncatedOperator build_padded_power(PowerKind kind, int dim, double q) {
  if (dim < 2) {
    throw std::invalid_argument("build_padded_power: dim must be >= 2");
  }
  const int pad = kind == PowerKind::X4 ? 2 : 1;
  const auto [b, bdag] = build_ladder(dim + pad, q);
  const double scale = std::sqrt(1.0 + q) / 2.0;

  Eigen::MatrixXd full;
  switch (kind) {
    case PowerKind::X2: {
      const Eigen::MatrixXd x = scale * (bdag.matrix() + b.matrix());
      full = x * x;
      break;
    }
    case PowerKind::P2: {
      // P = i s (b^+ - b), so P^2 = -s^2 (b^+ - b)^2 is real.
      const Eigen::MatrixXd d = bdag.matrix() - b.matrix();
      full = -(scale * scale) * (d * d);
      break;
    }
    case PowerKind::X4: {
      const Eigen::MatrixXd x = scale * (bdag.matrix() + b.matrix());
      const Eigen::MatrixXd x2 = x * x;
      full = x2 * x2;
      break;
    }
  }
  return TruncatedOperator(full.topLeftCorner(dim, dim));
}

Model parse_model(std::string_view name) {
  if (name == "h0" || name == "H0") return Model::H0;
  if (name == "ho" || name == "HO") return Model::HO;
  if (name == "ao" || name == "AO") return Model::AO;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected h0, ho or ao)");
}

std::string_view model_name(Model m) {
  switch (m) {
    case Model::H0:
      return "h0";
    case Model::HO:
      return "ho";
    case Model::AO:
      return "ao";
  }
  return "?";
}

TruncatedOperator build_hamiltonian(Model model, int dim, double q,
                                    const ModelParams& params) {
  if (dim < 2) {
    throw std::invalid_argument("build_hamiltonian: dim must be >= 2");
  }
  if (params.gamma < 0.0 || params.delta < 0.0) {
    throw std::invalid_argument(
        "build_hamiltonian: gamma and delta must be >= 0");
  }
  if (!(q > 0.0)) throw std::invalid_argument("build_hamiltonian: q must be > 0");

  const double prefactor = q_number(2, q) / 4.0;
  Eigen::MatrixXd h0 = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    h0(n, n) = prefactor * (q_number(n, q) + q_number(n + 1, q));
  }
  TruncatedOperator h(std::move(h0));

  switch (model) {
    case Model::H0:
      break;
    case Model::HO:
      h += (params.gamma / 2.0) * build_padded_power(PowerKind::X2, dim, q);
      break;
    case Model::AO:
      h += params.delta * build_padded_power(PowerKind::X4, dim, q);
      break;
  }
  return h;
}

}  // namespace qdeform
