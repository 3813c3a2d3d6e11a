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

// Probe-signal sampling, Fourier transform and level extraction.
//
// The probe signal is a sum of cosines at twice the energy levels, so a
// spectral peak at angular frequency w corresponds to the level E = w / 2.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "qdeform/simulator.hpp"
#include "qdeform/spinmap.hpp"

namespace qdeform {

inline constexpr std::size_t kDefaultSamplesExact = 4096;
inline constexpr std::size_t kDefaultSamplesShots = 8192;
/// Fraction of the Nyquist frequency used by the default time step.
inline constexpr double kNyquistFill = 0.8;
inline constexpr double kDefaultProminence = 0.05;
inline constexpr std::size_t kDefaultPeakSeparationBins = 16;
inline constexpr int kDefaultPadding = 2;

struct TimeSeries {
  double dt = 0.0;
  std::vector<double> samples;

  double time(std::size_t j) const { return static_cast<double>(j) * dt; }
  std::size_t size() const { return samples.size(); }
};

/// dt such that 2 * d.norm_bound() = kNyquistFill * pi / dt.
double default_dt(const PauliCoefficients& d);

/// Throws NyquistViolation unless pi / dt > 2 * d.norm_bound().
void check_nyquist(const PauliCoefficients& d, double dt);

/**
 * samples[j] = probe_expectation(d, j dt, cfg), j = 0..count-1.
 *
 * count must be a power of two >= 16. Samples are computed concurrently and
 * stored in index order.
 */
TimeSeries sample_series(const PauliCoefficients& d, double dt,
                         std::size_t count, const MeasurementConfig& cfg);

enum class Window { Rectangular, Hann };
Window parse_window(std::string_view name);
std::string_view window_name(Window w);

struct DftOptions {
  Window window = Window::Rectangular;
  /// Zero-padding factor; the transform length is padding * M.
  int padding = kDefaultPadding;
};

/// Fourier transform sampled at angular frequencies 2 pi k / (N dt),
/// N = padding * M, ordered ascending from k = -N/2 to N/2 - 1.
struct Spectrum {
  std::vector<double> frequencies;
  std::vector<double> values;  // real part
  std::vector<double> imag;
  double dt = 0.0;
  std::size_t samples = 0;  // M, before padding

  double bin_width() const;
};

/**
 * values[k] + i imag[k] = (dt / 2 pi) sum_j w_j s_j e^{i w_k t_j}.
 *
 * The signal is even in t, so the real part of this one-sided sum is half
 * the two-sided transform over [-T, T]. That transform resolves 2 pi / (2T),
 * which is why the default zero-padding factor is 2: with padding 1 a peak
 * half-way between bins is sampled at its zero crossings. The Hann option
 * uses the right half of a length-2M Hann window, w_j = (1 + cos(pi j/M))/2.
 */
Spectrum dft_real(const TimeSeries& ts, const DftOptions& options = {});

struct Level {
  double energy = 0.0;
  double height = 0.0;
  double bin_width = 0.0;  // angular-frequency bin of the source spectrum
};

struct EnergyLevels {
  std::vector<Level> levels;  // ascending in energy
  std::vector<double> energies() const;
};

/**
 * Picks the n_expected tallest local maxima of the real part on w > 0.
 *
 * A candidate must exceed min_prominence times the largest value on w > 0
 * and lie more than min_separation_bins from any taller accepted peak.
 * Centers are refined by three-point parabolic interpolation and converted
 * with E = w / 2. Throws InsufficientPeaks when too few qualify.
 */
EnergyLevels detect_levels(
    const Spectrum& s, std::size_t n_expected,
    double min_prominence = kDefaultProminence,
    std::size_t min_separation_bins = kDefaultPeakSeparationBins);

struct LevelMatch {
  std::vector<double> abs_errors;
  double max_error = 0.0;
};

/// Pairs levels in ascending order. Throws on a length mismatch.
LevelMatch match_levels(const EnergyLevels& detected,
                        std::span<const double> reference);

/// Half of an angular-frequency bin of an unpadded M-point transform,
/// pi / (M dt); the accuracy target for a detected level.
double half_bin(std::size_t samples, double dt);

/// CSV with header "t,value".
void write_csv(std::ostream& out, const TimeSeries& ts);
/// CSV with header "omega,re_value".
void write_csv(std::ostream& out, const Spectrum& s);

}  // namespace qdeform
