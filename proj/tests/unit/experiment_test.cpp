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

#include "qdeform/experiment.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qdeform/verify.hpp"

#ifndef QDEFORM_GOLDEN_DIR
#error "QDEFORM_GOLDEN_DIR must be defined"
#endif

namespace qdeform {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qdeform_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Config, QGrid) {
  const auto g = parse_q_grid("0.5:2.0:0.1");
  ASSERT_EQ(g.size(), 16u);
  EXPECT_EQ(g.front(), 0.5);
  EXPECT_EQ(g[7], 1.2);
  EXPECT_EQ(g.back(), 2.0);
  EXPECT_THROW(parse_q_grid("1:0.5:0.1"), std::invalid_argument);
  EXPECT_THROW(parse_q_grid("0:1:0.5"), std::invalid_argument);
}

TEST(Config, RoundTripDefaults) {
  const ExperimentConfig cfg;
  EXPECT_EQ(parse_config(serialize_config(cfg)), cfg);
}

TEST(Config, RoundTripEverythingSet) {
  ExperimentConfig cfg;
  cfg.model = Model::AO;
  cfg.q_grid = parse_q_grid("0.5:1.1:0.3");
  cfg.gamma = 0.125;
  cfg.delta = 0.1;
  cfg.dt = 0.0123456789;
  cfg.samples = 2048;
  cfg.measurement = MeasurementConfig::sampled(1024, 99);
  cfg.window = Window::Hann;
  cfg.t_max = 40.0;
  cfg.out = "runs/ao";
  const auto text = serialize_config(cfg);
  EXPECT_EQ(parse_config(text), cfg);
  EXPECT_EQ(serialize_config(parse_config(text)), text);
}

TEST(Config, ParsingRules) {
  const auto cfg = parse_config("# comment\nmodel = ho\nq = 1.5\nshots = 64\n");
  EXPECT_EQ(cfg.model, Model::HO);
  EXPECT_EQ(cfg.q_grid, std::vector<double>{1.5});
  EXPECT_EQ(cfg.measurement.mode, MeasurementConfig::Mode::Shots);
  EXPECT_EQ(parse_config("q_grid = 0.5:0.7:0.1\n").q_grid.size(), 3u);
  EXPECT_THROW(parse_config("colour = red\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("model ho\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("mode = shots\n"), std::invalid_argument);
}

TEST(Config, Resolution) {
  ExperimentConfig cfg;
  EXPECT_EQ(cfg.resolved_samples(), 4096u);
  cfg.measurement = MeasurementConfig::sampled(10, 1);
  EXPECT_EQ(cfg.resolved_samples(), 8192u);
  cfg.samples = 512;
  cfg.t_max = 51.2;
  EXPECT_NEAR(cfg.resolved_dt(1.0), 0.1, 1e-15);
}

TEST(Pipeline, FreeOscillatorAtOneQ) {
  ExperimentConfig cfg;
  const auto r = run_point(cfg, 1.0);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(r.detected[k], 0.5 + static_cast<double>(k), r.half_bin);
  }
  EXPECT_LT(r.max_error, r.half_bin);
  EXPECT_EQ(r.reference_source, ReferenceSpectrum::Source::ClosedForm);
}

TEST(Pipeline, QuadraticGridHasOneRowPerQ) {
  ExperimentConfig cfg;
  cfg.model = Model::HO;
  cfg.gamma = 0.5;
  cfg.q_grid = parse_q_grid("0.5:2.0:0.1");
  const auto rows = run_spectrum(cfg);
  ASSERT_EQ(rows.size(), 16u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].q, cfg.q_grid[i]);
    EXPECT_TRUE(rows[i].shifted.has_value());
    EXPECT_EQ(rows[i].reference_source, ReferenceSpectrum::Source::ExactDiag);
  }
}

TEST(Pipeline, ZeroQuarticMatchesFree) {
  ExperimentConfig free;
  free.q_grid = {0.7, 1.0, 1.8};
  ExperimentConfig quartic = free;
  quartic.model = Model::AO;
  const auto a = run_spectrum(free);
  const auto b = run_spectrum(quartic);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[i].detected[k], b[i].detected[k], 1e-12);
    EXPECT_FALSE(b[i].shifted.has_value());
  }
}

TEST(Pipeline, FailureNamesTheOffendingQ) {
  ExperimentConfig cfg;
  cfg.dt = 1.0;  // violates the sampling bound
  try {
    run_point(cfg, 1.0);
    FAIL() << "expected PointFailure";
  } catch (const PointFailure& e) {
    EXPECT_EQ(e.q(), 1.0);
  }
}

TEST(Output, SpectrumHeaderGolden) {
  std::ifstream in(std::string(QDEFORM_GOLDEN_DIR) + "/spectrum_header.csv");
  ASSERT_TRUE(in);
  std::string golden;
  std::getline(in, golden);
  EXPECT_EQ(spectrum_csv_header(), golden);
}

TEST(Output, SpectrumFiles) {
  ExperimentConfig cfg;
  cfg.out = scratch_dir("spectrum").string();
  cmd_spectrum(cfg);
  const auto csv = slurp(fs::path(cfg.out) / "spectrum.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), spectrum_csv_header());
  EXPECT_TRUE(fs::exists(fs::path(cfg.out) / "spectrum.manifest.json"));
}

TEST(Output, TimeseriesFiles) {
  ExperimentConfig cfg;
  cfg.out = scratch_dir("timeseries").string();
  const auto r = cmd_timeseries(cfg);
  const auto csv = slurp(fs::path(cfg.out) / "timeseries.csv");
  EXPECT_EQ(csv.substr(0, 10), "t,value\n0,");
  EXPECT_NEAR(std::stod(csv.substr(10)), 1.0, 1e-14);
  const auto fourier = slurp(fs::path(cfg.out) / "fourier.csv");
  EXPECT_EQ(fourier.substr(0, 15), "omega,re_value\n");
  const auto levels = detect_levels(r.spectrum, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(2.0 * levels.levels[k].energy, 2.0 * static_cast<double>(k) + 1.0,
                r.spectrum.bin_width());
  }
  EXPECT_THROW(cmd_timeseries([] {
                 ExperimentConfig c;
                 c.q_grid = {1.0, 2.0};
                 return c;
               }()),
               std::invalid_argument);
}

TEST(Output, ShotModeIsByteIdentical) {
  ExperimentConfig cfg;
  cfg.measurement = MeasurementConfig::sampled(1024, 7);
  cfg.samples = 1024;
  cfg.out = scratch_dir("shots_a").string();
  cmd_timeseries(cfg);
  const auto first = slurp(fs::path(cfg.out) / "timeseries.csv");
  cfg.out = scratch_dir("shots_b").string();
  cmd_timeseries(cfg);
  EXPECT_EQ(slurp(fs::path(cfg.out) / "timeseries.csv"), first);
  EXPECT_FALSE(first.empty());
}

TEST(Verify, AllSuitesPass) {
  const auto report = run_verify();
  EXPECT_GE(report.suites.size(), 4u);
  for (const auto& s : report.suites) {
    EXPECT_TRUE(s.passed()) << s.name << ": " << s.first_failure;
    EXPECT_GT(s.cases, 0u);
  }
  std::ostringstream out;
  print_report(out, report);
  EXPECT_NE(out.str().find("max dev"), std::string::npos);
}

}  // namespace
}  // namespace qdeform
