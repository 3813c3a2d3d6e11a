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

#include <fmt/format.h>

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdeform/circuit.hpp"

namespace qdeform {

namespace {

struct KindName {
  GateKind kind;
  std::string_view name;
};

constexpr KindName kNames[] = {
    {GateKind::H, "h"},   {GateKind::RZ, "rz"}, {GateKind::RY, "ry"},
    {GateKind::ZZ, "zz"}, {GateKind::CX, "cx"}, {GateKind::U, "u"},
    {GateKind::GU, "gu"},
};

std::string_view name_of(GateKind k) {
  for (const auto& kn : kNames) {
    if (kn.kind == k) return kn.name;
  }
  return "?";
}

std::optional<GateKind> kind_of(std::string_view name) {
  for (const auto& kn : kNames) {
    if (kn.name == name) return kn.kind;
  }
  return std::nullopt;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw std::invalid_argument(
      fmt::format("parse_circuit: line {}: {}", line_no, msg));
}

int parse_qubit(std::string_view tok, std::size_t line_no) {
  int q = -1;
  if (tok.size() < 2 || tok[0] != 'q') fail(line_no, "expected qubit 'qN'");
  const auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line_no, "bad qubit '" + std::string(tok) + "'");
  }
  return q;
}

double parse_number(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "bad number '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "bad number '" + tok + "'");
  return v;
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::string out = fmt::format("qubits {}\n", c.n_qubits());
  for (const auto& g : c.gates()) {
    const bool prefixed = g.control && g.kind != GateKind::CX;
    out += prefixed ? "c" : "";
    out += name_of(g.kind);
    for (int k = 0; k < g.num_params(); ++k) {
      out += fmt::format(" {}", g.params[k]);
    }
    if (g.control) out += fmt::format(" q{}", *g.control);
    for (int k = 0; k < g.num_targets(); ++k) {
      out += fmt::format(" q{}", g.targets[k]);
    }
    out += '\n';
  }
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!circuit) {
      if (tok.size() != 2 || tok[0] != "qubits") {
        fail(line_no, "expected 'qubits N' header");
      }
      circuit.emplace(static_cast<int>(parse_number(tok[1], line_no)));
      continue;
    }

    std::string_view name = tok[0];
    bool controlled = false;
    auto kind = kind_of(name);
    if (!kind && name.size() > 1 && name[0] == 'c') {
      kind = kind_of(name.substr(1));
      controlled = kind.has_value();
    }
    if (!kind) fail(line_no, "unknown gate '" + tok[0] + "'");

    Gate g;
    g.kind = *kind;
    const int np = g.num_params();
    const int nq = g.num_targets() + (controlled || g.kind == GateKind::CX ? 1 : 0);
    if (static_cast<int>(tok.size()) != 1 + np + nq) {
      fail(line_no, fmt::format("'{}' takes {} parameters and {} qubits",
                                tok[0], np, nq));
    }
    for (int k = 0; k < np; ++k) g.params[k] = parse_number(tok[1 + k], line_no);
    std::size_t next = 1 + static_cast<std::size_t>(np);
    if (controlled || g.kind == GateKind::CX) {
      g.control = parse_qubit(tok[next++], line_no);
    }
    for (int k = 0; k < g.num_targets(); ++k) {
      g.targets[k] = parse_qubit(tok[next++], line_no);
    }
    try {
      circuit->add(g);
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
  }
  if (!circuit) throw std::invalid_argument("parse_circuit: empty input");
  return *circuit;
}

}  // namespace qdeform
