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

#include "qdeform/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdeform/error.hpp"

namespace qdeform {

std::string_view source_name(ReferenceSpectrum::Source s) {
  switch (s) {
    case ReferenceSpectrum::Source::ClosedForm:
      return "closed_form_e";
    case ReferenceSpectrum::Source::ShiftedOmega:
      return "shifted_omega";
    case ReferenceSpectrum::Source::ExactDiag:
      return "exact_diag";
  }
  return "?";
}

ReferenceSpectrum spectrum_h0(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("spectrum_h0: q must be > 0");
  ReferenceSpectrum r;
  r.source = ReferenceSpectrum::Source::ClosedForm;
  for (int n = 0; n < 4; ++n) {
    r.levels[n] = 0.25 * (q + 1.0) * (q_number(n, q) + q_number(n + 1, q));
  }
  return r;
}

ReferenceSpectrum spectrum_hho_paper(double q, double gamma) {
  if (gamma < 0.0) {
    throw std::invalid_argument("spectrum_hho_paper: gamma must be >= 0");
  }
  ReferenceSpectrum r = spectrum_h0(q);
  r.source = ReferenceSpectrum::Source::ShiftedOmega;
  const double scale = std::sqrt(1.0 + gamma);
  for (double& e : r.levels) e *= scale;
  return r;
}

namespace {

// Eigenvalues of [[a, c], [c, b]].
std::array<double, 2> symmetric_2x2(double a, double b, double c) {
  const double mean = 0.5 * (a + b);
  const double radius = std::hypot(0.5 * (a - b), c);
  return {mean - radius, mean + radius};
}

}  // namespace

ReferenceSpectrum exact_diag(const TruncatedOperator& h) {
  if (h.dim() != 4) throw std::invalid_argument("exact_diag: expected 4x4");
  if (!h.is_symmetric(1e-12)) {
    throw std::invalid_argument("exact_diag: matrix must be symmetric");
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if ((r + c) % 2 != 0 && std::abs(h(r, c)) > 1e-12) {
        throw NotBlockStructured(
            "exact_diag: matrix couples even and odd Fock levels");
      }
    }
  }
  const auto even = symmetric_2x2(h(0, 0), h(2, 2), h(0, 2));
  const auto odd = symmetric_2x2(h(1, 1), h(3, 3), h(1, 3));

  ReferenceSpectrum r;
  r.source = ReferenceSpectrum::Source::ExactDiag;
  r.levels = {even[0], even[1], odd[0], odd[1]};
  std::sort(r.levels.begin(), r.levels.end());
  return r;
}

}  // namespace qdeform
