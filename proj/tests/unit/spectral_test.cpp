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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qdeform/analytic.hpp"
#include "qdeform/error.hpp"
#include "qdeform/spinmap.hpp"

namespace qdeform {
namespace {

using std::numbers::pi;

TimeSeries cosine(double omega, double dt, std::size_t m) {
  TimeSeries ts{dt, std::vector<double>(m)};
  for (std::size_t j = 0; j < m; ++j) ts.samples[j] = std::cos(omega * ts.time(j));
  return ts;
}

std::size_t argmax(const std::vector<double>& v, std::size_t from, std::size_t to) {
  std::size_t best = from;
  for (std::size_t i = from; i < to; ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

TEST(Sampling, FreeOscillatorSeries) {
  const auto d = coeffs_h0(1.0);
  const auto small = sample_series(d, 0.1, 16, MeasurementConfig::exact());
  EXPECT_NEAR(small.samples[0], 1.0, 1e-14);
  const auto ts = sample_series(d, 0.2, 1024, MeasurementConfig::exact());
  const double expected =
      0.25 * (std::cos(1.0) + std::cos(3.0) + std::cos(5.0) + std::cos(7.0));
  EXPECT_NEAR(ts.samples[5], expected, 1e-12);
  EXPECT_NEAR(ts.samples[5], 0.14697, 1e-5);
}

TEST(Sampling, NyquistGuard) {
  const auto d = coeffs_h0(1.0);
  try {
    sample_series(d, 0.5, 64, MeasurementConfig::exact());
    FAIL() << "expected NyquistViolation";
  } catch (const NyquistViolation& e) {
    EXPECT_NEAR(e.required(), 7.0, 1e-14);
    EXPECT_NEAR(e.nyquist(), 2 * pi, 1e-14);
  }
  EXPECT_NO_THROW(check_nyquist(d, default_dt(d)));
  EXPECT_THROW(sample_series(d, 0.1, 100, MeasurementConfig::exact()),
               std::invalid_argument);
}

TEST(Dft, MatchesDirectSum) {
  TimeSeries ts{0.13, {}};
  for (int j = 0; j < 32; ++j) ts.samples.push_back(std::sin(0.7 * j) + 0.3 * std::cos(2.1 * j));
  for (auto window : {Window::Rectangular, Window::Hann}) {
    for (int padding : {1, 2, 3}) {
      const auto s = dft_real(ts, {window, padding});
      ASSERT_EQ(s.values.size(), 32u * padding);
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < 32; ++j) {
          const double w =
              window == Window::Hann ? 0.5 * (1.0 + std::cos(pi * j / 32.0)) : 1.0;
          acc += w * ts.samples[j] * std::polar(1.0, s.frequencies[k] * ts.time(j));
        }
        acc *= ts.dt / (2.0 * pi);
        EXPECT_NEAR(s.values[k], acc.real(), 1e-13);
        EXPECT_NEAR(s.imag[k], acc.imag(), 1e-13);
      }
    }
  }
}

TEST(Dft, ParsevalWithoutPadding) {
  TimeSeries ts{0.05, {}};
  for (int j = 0; j < 256; ++j) ts.samples.push_back(std::cos(0.31 * j * j) - 0.2);
  const auto s = dft_real(ts, {Window::Rectangular, 1});
  double time_energy = 0.0;
  for (double x : ts.samples) time_energy += x * x;
  double freq_energy = 0.0;
  const double scale = 2.0 * pi / ts.dt;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    freq_energy += std::norm(std::complex<double>(s.values[k], s.imag[k]) * scale);
  }
  EXPECT_NEAR(freq_energy / 256.0, time_energy, 1e-9 * time_energy);
}

TEST(Dft, FrequencyGrid) {
  const auto s = dft_real(cosine(1.0, 0.1, 64));
  EXPECT_NEAR(s.bin_width(), 2 * pi / (128 * 0.1), 1e-14);
  EXPECT_NEAR(s.frequencies[64], 0.0, 0.0);
  EXPECT_TRUE(std::is_sorted(s.frequencies.begin(), s.frequencies.end()));
}

TEST(Dft, ConstantPeaksAtZero) {
  TimeSeries ts{0.1, std::vector<double>(128, 1.0)};
  const auto s = dft_real(ts);
  const auto k = argmax(s.values, 0, s.values.size());
  EXPECT_EQ(s.frequencies[k], 0.0);
}

TEST(Dft, CosineOnBinCenter) {
  const double dt = 0.1;
  const std::size_t m = 256;
  const double bin = 2 * pi / (2 * m * dt);
  const double w0 = 20 * bin;
  const auto s = dft_real(cosine(w0, dt, m));
  const std::size_t mid = m;  // index of w = 0 with padding 2
  EXPECT_NEAR(s.frequencies[argmax(s.values, mid + 1, s.values.size())], w0, 1e-12);
  EXPECT_NEAR(s.frequencies[argmax(s.values, 0, mid)], -w0, 1e-12);
}

TEST(Dft, EvenSymmetryOfRealPart) {
  const auto d = coeffs_hho(1.4, 0.5);
  const auto ts = sample_series(d, default_dt(d), 512, MeasurementConfig::exact());
  const auto s = dft_real(ts);
  const std::size_t n = s.values.size();
  for (std::size_t k = 1; k < n / 2; ++k) {
    EXPECT_NEAR(s.values[n / 2 + k], s.values[n / 2 - k], 1e-13);
  }
}

TEST(Dft, FreeOscillatorPeaks) {
  const auto d = coeffs_h0(1.0);
  const auto s = dft_real(sample_series(d, 0.05, 4096, MeasurementConfig::exact()));
  const auto levels = detect_levels(s, 4);
  ASSERT_EQ(levels.levels.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(2.0 * levels.levels[k].energy, 2.0 * k + 1.0, s.bin_width());
  }
}

TEST(Detect, FreeOscillatorLevels) {
  const double dt = 0.05;
  const std::size_t m = 4096;
  const auto s = dft_real(sample_series(coeffs_h0(1.0), dt, m, MeasurementConfig::exact()));
  const auto levels = detect_levels(s, 4);
  const auto ref = spectrum_h0(1.0).levels;
  const auto match = match_levels(levels, ref);
  EXPECT_LT(match.max_error, half_bin(m, dt));
  for (const auto& l : levels.levels) EXPECT_GT(l.energy, 0.0);
}

TEST(Detect, DeformedLevelsWithDefaultStep) {
  const auto d = coeffs_h0(2.0);
  const double dt = default_dt(d);
  const auto s = dft_real(sample_series(d, dt, 4096, MeasurementConfig::exact()));
  const auto match = match_levels(detect_levels(s, 4), spectrum_h0(2.0).levels);
  EXPECT_LT(match.max_error, half_bin(4096, dt));
}

TEST(Detect, EdgeCases) {
  const auto s = dft_real(cosine(3.0, 0.1, 512));
  EXPECT_TRUE(detect_levels(s, 0).levels.empty());
  try {
    detect_levels(s, 2, 0.5);
    FAIL() << "expected InsufficientPeaks";
  } catch (const InsufficientPeaks& e) {
    EXPECT_EQ(e.found(), 1u);
    EXPECT_EQ(e.expected(), 2u);
  }
  const auto one = detect_levels(s, 1);
  EXPECT_NEAR(one.levels[0].energy, 1.5, half_bin(512, 0.1));
}

TEST(Match, IdenticalLists) {
  EnergyLevels e;
  for (double x : {0.5, 1.5, 2.5}) e.levels.push_back({x, 1.0, 0.1});
  const std::vector<double> ref{2.5, 0.5, 1.5};
  const auto m = match_levels(e, ref);
  EXPECT_EQ(m.max_error, 0.0);
  EXPECT_THROW(match_levels(e, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Csv, Headers) {
  std::ostringstream a;
  write_csv(a, TimeSeries{0.5, {1.0, 0.25}});
  EXPECT_EQ(a.str(), "t,value\n0,1\n0.5,0.25\n");
  std::ostringstream b;
  write_csv(b, dft_real(TimeSeries{0.5, {1.0, 0.25}}, {Window::Rectangular, 1}));
  EXPECT_EQ(b.str().substr(0, 15), "omega,re_value\n");
}

TEST(Windows, Names) {
  EXPECT_EQ(parse_window("hann"), Window::Hann);
  EXPECT_EQ(parse_window("rect"), Window::Rectangular);
  EXPECT_EQ(window_name(Window::Hann), "hann");
  EXPECT_THROW(parse_window("kaiser"), std::invalid_argument);
}

}  // namespace
}  // namespace qdeform
