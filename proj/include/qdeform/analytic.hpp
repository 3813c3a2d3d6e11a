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

#include <array>
#include <string_view>

#include "qdeform/qops.hpp"

namespace qdeform {

struct ReferenceSpectrum {
  enum class Source { ClosedForm, ShiftedOmega, ExactDiag };
  Source source = Source::ClosedForm;
  std::array<double, 4> levels{};  // ascending, units of hbar*omega
};

std::string_view source_name(ReferenceSpectrum::Source s);

/// e_n = (q + 1)([n]_q + [n+1]_q) / 4 for n = 0..3.
ReferenceSpectrum spectrum_h0(double q);

/// Closed-form levels with omega -> sqrt(omega^2 + gamma), q held fixed:
/// sqrt(1 + gamma) * spectrum_h0(q).
ReferenceSpectrum spectrum_hho_paper(double q, double gamma);

/// Eigenvalues of a 4x4 matrix whose even ({0,2}) and odd ({1,3}) Fock
/// levels decouple, via two closed-form 2x2 solves. Throws
/// NotBlockStructured if any cross-parity entry exceeds 1e-12.
ReferenceSpectrum exact_diag(const TruncatedOperator& h);

}  // namespace qdeform
