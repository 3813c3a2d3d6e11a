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

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "parallel.hpp"
#include "qdeform/spinmap.hpp"

namespace qdeform {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument(fmt::format("{}: bad number '{}'", what, s));
  }
  return v;
}

std::uint64_t to_uint(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s.front() == '-') {
    throw std::invalid_argument(fmt::format("{}: bad integer '{}'", what, s));
  }
  return v;
}

double round12(double x) { return std::round(x * 1e12) / 1e12; }

std::vector<double> parse_q_list(const std::string& value) {
  if (value.find(':') != std::string::npos) return parse_q_grid(value);
  std::vector<double> out;
  std::stringstream ss(value);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(to_double(trim(item), "q_grid"));
  }
  return out;
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("q grid is empty");
  for (double q : grid) {
    if (!(q > 0.0) || !std::isfinite(q)) {
      throw std::invalid_argument(fmt::format("q = {} is not positive", q));
    }
  }
}

}  // namespace

std::size_t ExperimentConfig::resolved_samples() const {
  if (samples) return *samples;
  return measurement.mode == MeasurementConfig::Mode::Shots
             ? kDefaultSamplesShots
             : kDefaultSamplesExact;
}

double ExperimentConfig::resolved_dt(double q) const {
  if (dt) return *dt;
  if (t_max) return *t_max / static_cast<double>(resolved_samples());
  return default_dt(coefficients_for(model, q, params()));
}

std::vector<double> parse_q_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(trim(item));
  if (parts.size() != 3) {
    throw std::invalid_argument(
        fmt::format("q grid '{}' must have the form start:stop:step", text));
  }
  const double start = to_double(parts[0], "q grid start");
  const double stop = to_double(parts[1], "q grid stop");
  const double step = to_double(parts[2], "q grid step");
  if (!(step > 0.0) || stop < start) {
    throw std::invalid_argument("q grid needs step > 0 and stop >= start");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((stop - start) / step + 1e-6)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(round12(start + static_cast<double>(i) * step));
  }
  validate_grid(grid);
  return grid;
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::string grid;
  for (std::size_t i = 0; i < cfg.q_grid.size(); ++i) {
    grid += fmt::format("{}{}", i ? "," : "", cfg.q_grid[i]);
  }
  const bool shots = cfg.measurement.mode == MeasurementConfig::Mode::Shots;
  std::string out;
  out += fmt::format("model = {}\n", model_name(cfg.model));
  out += fmt::format("q_grid = {}\n", grid);
  out += fmt::format("gamma = {}\n", cfg.gamma);
  out += fmt::format("delta = {}\n", cfg.delta);
  out += fmt::format("dt = {}\n", cfg.dt ? fmt::format("{}", *cfg.dt) : "auto");
  out += fmt::format("samples = {}\n",
                     cfg.samples ? fmt::format("{}", *cfg.samples) : "auto");
  out += fmt::format("mode = {}\n", shots ? "shots" : "exact");
  out += fmt::format("shots = {}\n", cfg.measurement.shots);
  out += fmt::format("seed = {}\n", cfg.measurement.seed);
  out += fmt::format("window = {}\n", window_name(cfg.window));
  out += fmt::format("t_max = {}\n",
                     cfg.t_max ? fmt::format("{}", *cfg.t_max) : "none");
  out += fmt::format("out = {}\n", cfg.out);
  return out;
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  ExperimentConfig cfg = std::move(base);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::string> mode;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(
          fmt::format("config line {}: expected key = value", line_no));
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "model") {
      cfg.model = parse_model(value);
    } else if (key == "q_grid") {
      cfg.q_grid = parse_q_list(value);
      validate_grid(cfg.q_grid);
    } else if (key == "q") {
      cfg.q_grid = {to_double(value, "q")};
      validate_grid(cfg.q_grid);
    } else if (key == "gamma") {
      cfg.gamma = to_double(value, "gamma");
    } else if (key == "delta") {
      cfg.delta = to_double(value, "delta");
    } else if (key == "dt") {
      cfg.dt = value == "auto" ? std::nullopt
                               : std::optional<double>(to_double(value, "dt"));
    } else if (key == "samples") {
      cfg.samples = value == "auto" ? std::nullopt
                                    : std::optional<std::size_t>(
                                          to_uint(value, "samples"));
    } else if (key == "mode") {
      if (value != "exact" && value != "shots") {
        throw std::invalid_argument("mode must be exact or shots");
      }
      mode = value;
    } else if (key == "shots") {
      cfg.measurement.shots = to_uint(value, "shots");
    } else if (key == "seed") {
      cfg.measurement.seed = to_uint(value, "seed");
    } else if (key == "window") {
      cfg.window = parse_window(value);
    } else if (key == "t_max") {
      cfg.t_max = value == "none" ? std::nullopt
                                  : std::optional<double>(to_double(value, "t_max"));
    } else if (key == "out") {
      cfg.out = value;
    } else {
      throw std::invalid_argument(
          fmt::format("config line {}: unknown key '{}'", line_no, key));
    }
  }
  if (mode) {
    cfg.measurement.mode = *mode == "shots" ? MeasurementConfig::Mode::Shots
                                            : MeasurementConfig::Mode::Exact;
  } else if (cfg.measurement.shots > 0) {
    cfg.measurement.mode = MeasurementConfig::Mode::Shots;
  }
  if (cfg.measurement.mode == MeasurementConfig::Mode::Shots &&
      cfg.measurement.shots == 0) {
    throw std::invalid_argument("shots mode needs a positive shot count");
  }
  return cfg;
}

PointFailure::PointFailure(double q, const std::string& what)
    : Error(fmt::format("q = {}: {}", q, what)), q_(q) {}

ReferenceSpectrum reference_levels(Model model, double q,
                                   const ModelParams& params) {
  if (model == Model::H0) return spectrum_h0(q);
  return exact_diag(build_hamiltonian(model, kQubitDim, q, params));
}

PointResult run_point(const ExperimentConfig& cfg, double q) {
  try {
    const ModelParams params = cfg.params();
    const PauliCoefficients d = coefficients_for(cfg.model, q, params);

    PointResult r;
    r.q = q;
    r.dt = cfg.resolved_dt(q);
    r.samples = cfg.resolved_samples();
    r.half_bin = half_bin(r.samples, r.dt);

    const TimeSeries ts = sample_series(d, r.dt, r.samples, cfg.measurement);
    const Spectrum spectrum = dft_real(ts, {cfg.window, kDefaultPadding});
    const EnergyLevels levels = detect_levels(spectrum, 4);

    const ReferenceSpectrum ref = reference_levels(cfg.model, q, params);
    r.reference = ref.levels;
    r.reference_source = ref.source;
    if (cfg.model != Model::AO) {
      r.shifted = spectrum_hho_paper(q, cfg.model == Model::HO ? cfg.gamma : 0.0).levels;
    }
    const LevelMatch m = match_levels(levels, ref.levels);
    for (std::size_t k = 0; k < 4; ++k) {
      r.detected[k] = levels.levels[k].energy;
      r.abs_error[k] = m.abs_errors[k];
    }
    r.max_error = m.max_error;
    return r;
  } catch (const PointFailure&) {
    throw;
  } catch (const Error& e) {
    throw PointFailure(q, e.what());
  } catch (const std::invalid_argument& e) {
    throw PointFailure(q, e.what());
  }
}

std::vector<PointResult> run_spectrum(const ExperimentConfig& cfg) {
  validate_grid(cfg.q_grid);
  std::vector<std::optional<PointResult>> slots(cfg.q_grid.size());
  detail::parallel_for(cfg.q_grid.size(), [&](std::size_t i) {
    slots[i] = run_point(cfg, cfg.q_grid[i]);
  });
  std::vector<PointResult> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

std::string spectrum_csv_header() {
  std::string h = "q";
  for (const char* group : {"detected", "reference", "abs_error", "shifted_omega"}) {
    for (int k = 1; k <= 4; ++k) h += fmt::format(",E{}_{}", k, group);
  }
  h += ",half_bin";
  return h;
}

void write_spectrum_csv(std::ostream& out, const std::vector<PointResult>& rows) {
  out << spectrum_csv_header() << '\n';
  for (const auto& r : rows) {
    std::string line = fmt::format("{}", r.q);
    for (double v : r.detected) line += fmt::format(",{}", v);
    for (double v : r.reference) line += fmt::format(",{}", v);
    for (double v : r.abs_error) line += fmt::format(",{}", v);
    for (int k = 0; k < 4; ++k) {
      line += r.shifted ? fmt::format(",{}", (*r.shifted)[k]) : std::string(",");
    }
    line += fmt::format(",{}", r.half_bin);
    out << line << '\n';
  }
}

TimeseriesResult run_timeseries(const ExperimentConfig& cfg) {
  if (cfg.q_grid.size() != 1) {
    throw std::invalid_argument("timeseries takes exactly one q value");
  }
  const double q = cfg.q_grid.front();
  try {
    const PauliCoefficients d = coefficients_for(cfg.model, q, cfg.params());
    TimeseriesResult r;
    r.q = q;
    r.series = sample_series(d, cfg.resolved_dt(q), cfg.resolved_samples(),
                             cfg.measurement);
    r.spectrum = dft_real(r.series, {cfg.window, kDefaultPadding});
    return r;
  } catch (const Error& e) {
    throw PointFailure(q, e.what());
  }
}

namespace {

nlohmann::json manifest_base(const ExperimentConfig& cfg, std::string_view command) {
  nlohmann::json j;
  j["command"] = command;
  j["model"] = model_name(cfg.model);
  j["q_grid"] = cfg.q_grid;
  j["gamma"] = cfg.gamma;
  j["delta"] = cfg.delta;
  j["units"] = "hbar = m = omega = 1; energies in hbar*omega";
  j["samples"] = cfg.resolved_samples();
  j["window"] = window_name(cfg.window);
  j["zero_padding"] = kDefaultPadding;
  j["peak_prominence"] = kDefaultProminence;
  j["peak_separation_bins"] = kDefaultPeakSeparationBins;
  j["nyquist_fill"] = kNyquistFill;
  const bool shots = cfg.measurement.mode == MeasurementConfig::Mode::Shots;
  j["mode"] = shots ? "shots" : "exact";
  if (shots) {
    j["shots"] = cfg.measurement.shots;
    j["seed"] = cfg.measurement.seed;
  }
  j["config"] = serialize_config(cfg);
  return j;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

}  // namespace

std::vector<PointResult> cmd_spectrum(const ExperimentConfig& cfg) {
  const auto rows = run_spectrum(cfg);
  const std::filesystem::path dir(cfg.out);
  {
    auto f = open_output(dir / "spectrum.csv");
    write_spectrum_csv(f, rows);
  }
  nlohmann::json j = manifest_base(cfg, "spectrum");
  for (const auto& r : rows) {
    j["points"].push_back({{"q", r.q},
                           {"dt", r.dt},
                           {"samples", r.samples},
                           {"half_bin", r.half_bin},
                           {"reference", source_name(r.reference_source)},
                           {"max_abs_error", r.max_error}});
  }
  j["outputs"] = {"spectrum.csv"};
  auto f = open_output(dir / "spectrum.manifest.json");
  f << j.dump(2) << '\n';
  return rows;
}

TimeseriesResult cmd_timeseries(const ExperimentConfig& cfg) {
  TimeseriesResult r = run_timeseries(cfg);
  const std::filesystem::path dir(cfg.out);
  {
    auto f = open_output(dir / "timeseries.csv");
    write_csv(f, r.series);
  }
  {
    auto f = open_output(dir / "fourier.csv");
    write_csv(f, r.spectrum);
  }
  nlohmann::json j = manifest_base(cfg, "timeseries");
  j["dt"] = r.series.dt;
  j["t_max"] = r.series.time(r.series.size() - 1);
  j["outputs"] = {"timeseries.csv", "fourier.csv"};
  auto f = open_output(dir / "timeseries.manifest.json");
  f << j.dump(2) << '\n';
  return r;
}

}  // namespace qdeform
