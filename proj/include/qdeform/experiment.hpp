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

// End-to-end experiment runs: coefficients -> protocol circuit -> probe
// series -> spectrum -> levels, plus the file outputs of the command-line
// tool.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdeform/analytic.hpp"
#include "qdeform/error.hpp"
#include "qdeform/qops.hpp"
#include "qdeform/simulator.hpp"
#include "qdeform/spectral.hpp"

namespace qdeform {

/// Environment variable that overrides the configured output directory.
inline constexpr const char* kOutDirEnv = "QDEFORM_OUT_DIR";

struct ExperimentConfig {
  Model model = Model::H0;
  std::vector<double> q_grid{1.0};
  double gamma = 0.0;
  double delta = 0.0;
  std::optional<double> dt;           // default: default_dt per q
  std::optional<std::size_t> samples;  // default: 4096 exact, 8192 shots
  MeasurementConfig measurement;
  Window window = Window::Rectangular;
  std::optional<double> t_max;  // timeseries: dt = t_max / samples
  std::string out = ".";

  ModelParams params() const { return {gamma, delta}; }
  std::size_t resolved_samples() const;
  /// Time step used at deformation q.
  double resolved_dt(double q) const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

/// "start:stop:step", inclusive of stop within step/1e6. Values are rounded
/// to 12 decimals so 0.5:2.0:0.1 yields 0.5, 0.6, ..., 2.0 exactly as typed.
std::vector<double> parse_q_grid(std::string_view text);

/// key = value lines; every field is written, numbers in round-trip form.
std::string serialize_config(const ExperimentConfig& cfg);
/// Applies key = value lines on top of `base`. Unknown keys are errors.
/// '#' starts a comment.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});

/// A pipeline failure at one deformation value; wraps the original message.
class PointFailure : public Error {
 public:
  PointFailure(double q, const std::string& what);
  double q() const { return q_; }

 private:
  double q_;
};

struct PointResult {
  double q = 0.0;
  double dt = 0.0;
  std::size_t samples = 0;
  double half_bin = 0.0;  // pi / (M dt)
  std::array<double, 4> detected{};
  std::array<double, 4> reference{};
  ReferenceSpectrum::Source reference_source{};
  /// Closed form with the shifted frequency; absent for the quartic model.
  std::optional<std::array<double, 4>> shifted;
  std::array<double, 4> abs_error{};
  double max_error = 0.0;
};

/// Reference levels used for a model: the closed form for h0, exact
/// diagonalization of the truncated matrix otherwise.
ReferenceSpectrum reference_levels(Model model, double q,
                                   const ModelParams& params);

/// Full pipeline at one q. Throws PointFailure on Nyquist or peak failures.
PointResult run_point(const ExperimentConfig& cfg, double q);

/// run_point over cfg.q_grid, concurrently; rows come back in grid order.
std::vector<PointResult> run_spectrum(const ExperimentConfig& cfg);

void write_spectrum_csv(std::ostream& out, const std::vector<PointResult>& rows);
std::string spectrum_csv_header();

struct TimeseriesResult {
  double q = 0.0;
  TimeSeries series;
  Spectrum spectrum;
};

/// One (model, q) point; cfg.q_grid must hold exactly one value.
TimeseriesResult run_timeseries(const ExperimentConfig& cfg);

/// Writes spectrum.csv and spectrum.manifest.json under cfg.out.
std::vector<PointResult> cmd_spectrum(const ExperimentConfig& cfg);
/// Writes timeseries.csv, fourier.csv and timeseries.manifest.json.
TimeseriesResult cmd_timeseries(const ExperimentConfig& cfg);

}  // namespace qdeform
