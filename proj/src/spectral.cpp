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

#include "qdeform/spectral.hpp"

#include <fftw3.h>
#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "qdeform/error.hpp"

namespace qdeform {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

class RealForwardFft {
 public:
  explicit RealForwardFft(std::size_t n)
      : n_(n),
        in_(fftw_alloc_real(n)),
        out_(fftw_alloc_complex(n / 2 + 1)) {
    if (!in_ || !out_) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_.get(), out_.get(),
                                 FFTW_ESTIMATE);
    if (!plan_) throw std::runtime_error("fftw: planning failed");
  }
  ~RealForwardFft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  RealForwardFft(const RealForwardFft&) = delete;
  RealForwardFft& operator=(const RealForwardFft&) = delete;

  double* input() { return in_.get(); }
  void execute() { fftw_execute(plan_); }
  // sum_j x_j e^{-2 pi i j k / n}, k = 0..n/2
  std::complex<double> output(std::size_t k) const {
    return {out_.get()[k][0], out_.get()[k][1]};
  }

 private:
  std::size_t n_;
  std::unique_ptr<double, FftwFree> in_;
  std::unique_ptr<fftw_complex, FftwFree> out_;
  fftw_plan plan_ = nullptr;
};

}  // namespace

double default_dt(const PauliCoefficients& d) {
  const double bound = d.norm_bound();
  if (!(bound > 0.0)) {
    throw std::invalid_argument("default_dt: Hamiltonian has zero norm bound");
  }
  return kNyquistFill * kPi / (2.0 * bound);
}

void check_nyquist(const PauliCoefficients& d, double dt) {
  const double nyquist = kPi / dt;
  const double required = 2.0 * d.norm_bound();
  if (!(nyquist > required)) {
    throw NyquistViolation(
        fmt::format("time step {} too coarse: pi/dt = {:.6g} must exceed "
                    "2 * sum|d_i| = {:.6g}",
                    dt, nyquist, required),
        nyquist, required);
  }
}

TimeSeries sample_series(const PauliCoefficients& d, double dt,
                         std::size_t count, const MeasurementConfig& cfg) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("sample_series: dt must be positive");
  }
  if (count < 16 || !std::has_single_bit(count)) {
    throw std::invalid_argument(
        "sample_series: sample count must be a power of two >= 16");
  }
  check_nyquist(d, dt);

  TimeSeries ts{dt, std::vector<double>(count)};
  detail::parallel_for(count, [&](std::size_t j) {
    ts.samples[j] = probe_expectation(d, ts.time(j), cfg);
  });
  return ts;
}

Window parse_window(std::string_view name) {
  if (name == "rect" || name == "rectangular") return Window::Rectangular;
  if (name == "hann") return Window::Hann;
  throw std::invalid_argument("unknown window '" + std::string(name) +
                              "' (expected rect or hann)");
}

std::string_view window_name(Window w) {
  return w == Window::Hann ? "hann" : "rect";
}

double Spectrum::bin_width() const {
  if (frequencies.size() < 2) return 0.0;
  return frequencies[1] - frequencies[0];
}

Spectrum dft_real(const TimeSeries& ts, const DftOptions& options) {
  const std::size_t m = ts.size();
  if (m < 2 || !(ts.dt > 0.0)) {
    throw std::invalid_argument("dft_real: need at least two samples and dt > 0");
  }
  if (options.padding < 1) {
    throw std::invalid_argument("dft_real: padding must be >= 1");
  }
  const std::size_t n = m * static_cast<std::size_t>(options.padding);
  if (n % 2 != 0) throw std::invalid_argument("dft_real: transform length must be even");

  RealForwardFft fft(n);
  double* in = fft.input();
  for (std::size_t j = 0; j < n; ++j) {
    double w = 1.0;
    if (options.window == Window::Hann) {
      w = 0.5 * (1.0 + std::cos(kPi * static_cast<double>(j) /
                                static_cast<double>(m)));
    }
    in[j] = j < m ? w * ts.samples[j] : 0.0;
  }
  fft.execute();

  Spectrum s;
  s.dt = ts.dt;
  s.samples = m;
  s.frequencies.resize(n);
  s.values.resize(n);
  s.imag.resize(n);
  const double scale = ts.dt / (2.0 * kPi);
  const double bin = 2.0 * kPi / (static_cast<double>(n) * ts.dt);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::ptrdiff_t k = -half; k < half; ++k) {
    const auto idx = static_cast<std::size_t>(k + half);
    // For real input the e^{+i w t} sum at +k is the conjugate of FFTW's
    // e^{-i w t} output, and at -k it is the output itself.
    const std::complex<double> v =
        k >= 0 ? std::conj(fft.output(static_cast<std::size_t>(k)))
               : fft.output(static_cast<std::size_t>(-k));
    s.frequencies[idx] = static_cast<double>(k) * bin;
    s.values[idx] = scale * v.real();
    s.imag[idx] = scale * v.imag();
  }
  return s;
}

std::vector<double> EnergyLevels::energies() const {
  std::vector<double> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(l.energy);
  return out;
}

EnergyLevels detect_levels(const Spectrum& s, std::size_t n_expected,
                           double min_prominence,
                           std::size_t min_separation_bins) {
  if (n_expected > 4) {
    throw std::invalid_argument("detect_levels: at most four levels");
  }
  if (!(min_prominence > 0.0)) {
    throw std::invalid_argument("detect_levels: prominence must be > 0");
  }
  EnergyLevels out;
  if (n_expected == 0) return out;

  const auto first_positive = static_cast<std::size_t>(
      std::upper_bound(s.frequencies.begin(), s.frequencies.end(), 0.0) -
      s.frequencies.begin());
  const std::size_t n = s.values.size();
  if (first_positive + 2 >= n) {
    throw InsufficientPeaks("detect_levels: spectrum too short", 0, n_expected);
  }

  double global_max = 0.0;
  for (std::size_t i = first_positive; i < n; ++i) {
    global_max = std::max(global_max, s.values[i]);
  }
  const double threshold = min_prominence * global_max;

  std::vector<std::size_t> candidates;
  for (std::size_t i = first_positive; i + 1 < n; ++i) {
    const double v = s.values[i];
    if (v > threshold && v > s.values[i - 1] && v >= s.values[i + 1]) {
      candidates.push_back(i);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](std::size_t a, std::size_t b) { return s.values[a] > s.values[b]; });

  std::vector<std::size_t> accepted;
  for (std::size_t c : candidates) {
    if (accepted.size() == n_expected) break;
    const bool clear = std::none_of(accepted.begin(), accepted.end(), [&](std::size_t a) {
      const std::size_t gap = a > c ? a - c : c - a;
      return gap <= min_separation_bins;
    });
    if (clear) accepted.push_back(c);
  }
  if (accepted.size() < n_expected) {
    throw InsufficientPeaks(
        fmt::format("found {} spectral peaks, expected {}; increase the "
                    "sample count or adjust dt",
                    accepted.size(), n_expected),
        accepted.size(), n_expected);
  }

  const double bin = s.bin_width();
  for (std::size_t i : accepted) {
    const double ym = s.values[i - 1];
    const double y0 = s.values[i];
    const double yp = s.values[i + 1];
    const double curvature = ym - 2.0 * y0 + yp;
    double offset = 0.0;
    if (curvature < 0.0) offset = std::clamp(0.5 * (ym - yp) / curvature, -0.5, 0.5);
    const double omega = s.frequencies[i] + offset * bin;
    const double height = y0 - 0.25 * (ym - yp) * offset;
    out.levels.push_back({omega / 2.0, height, bin});
  }
  std::sort(out.levels.begin(), out.levels.end(),
            [](const Level& a, const Level& b) { return a.energy < b.energy; });
  return out;
}

LevelMatch match_levels(const EnergyLevels& detected,
                        std::span<const double> reference) {
  if (detected.levels.size() != reference.size()) {
    throw std::invalid_argument(
        fmt::format("match_levels: {} detected levels vs {} reference levels",
                    detected.levels.size(), reference.size()));
  }
  std::vector<double> ref(reference.begin(), reference.end());
  std::sort(ref.begin(), ref.end());
  LevelMatch m;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const double e = std::abs(detected.levels[k].energy - ref[k]);
    m.abs_errors.push_back(e);
    m.max_error = std::max(m.max_error, e);
  }
  return m;
}

double half_bin(std::size_t samples, double dt) {
  return kPi / (static_cast<double>(samples) * dt);
}

void write_csv(std::ostream& out, const TimeSeries& ts) {
  out << "t,value\n";
  for (std::size_t j = 0; j < ts.size(); ++j) {
    out << fmt::format("{},{}\n", ts.time(j), ts.samples[j]);
  }
}

void write_csv(std::ostream& out, const Spectrum& s) {
  out << "omega,re_value\n";
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    out << fmt::format("{},{}\n", s.frequencies[k], s.values[k]);
  }
}

}  // namespace qdeform
