// Copyright 2026 The cpbsim Authors
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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpb/errors.hpp"
#include "cpb/sweep.hpp"

namespace cpb {

// Sweep configurations are flat key = value text with four sections. Keys
// mirror the SweepConfig fields; list-valued keys take comma-separated
// numbers. '#' starts a comment.
//
//   [model]    e_c1 e_c2 e_m e_j1 e_j2 n_g1 n_g2
//              -- or the capacitance network instead of energies:
//              c_sigma1 c_sigma2 c_m c_g1 c_g2 c_p v_g1 v_g2 v_p e_charge
//              (e_j1/e_j2 stay direct inputs)
//   [initial]  xi                        (value or list)
//   [sweep]    gamma e_m e_j1 e_j2       (value or list; override [model])
//              t_start t_end n_points
//   [output]   outputs = csv, svg, validate
//              plot = lines | heatmap
//              title = free text
//
// Unset keys fall back to the defaults of default_sweep_config().

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline double parse_number(std::string_view text, int line_no) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw std::invalid_argument("config line " + std::to_string(line_no) + ": '" +
                                std::string(t) + "' is not a number");
  return v;
}

inline std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(trim(text.substr(start)));
      break;
    }
    parts.push_back(trim(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return parts;
}

struct ConfigEntry {
  std::string value;
  int line_no = 0;
};

}  // namespace detail

/// The reconstruction defaults used when a config key (or the whole file) is
/// absent: a symmetric device at the co-degeneracy point with E_c = 100,
/// E_J = 30, E_m = 5, an evenly mixed initial state, unitary dynamics, and a
/// 201-point time grid over [0, 20].
inline SweepConfig default_sweep_config() {
  SweepConfig cfg;
  cfg.model.e_c1 = 100.0;
  cfg.model.e_c2 = 100.0;
  cfg.model.e_m = 5.0;
  cfg.model.e_j1 = 30.0;
  cfg.model.e_j2 = 30.0;
  cfg.model.n_g1 = 0.5;
  cfg.model.n_g2 = 0.5;
  cfg.xi = {M_PI / 2.0};
  cfg.gamma = {0.0};
  cfg.e_m = {cfg.model.e_m};
  cfg.e_j1 = {cfg.model.e_j1};
  cfg.e_j2 = {cfg.model.e_j2};
  cfg.t_grid = TimeGrid{0.0, 20.0, 201};
  cfg.outputs = {OutputKind::csv};
  cfg.plot = PlotKind::lines;
  return cfg;
}

inline SweepConfig parse_config_text(const std::string& text) {
  using detail::ConfigEntry;
  static const std::map<std::string, std::vector<std::string>> kSchema = {
      {"model",
       {"e_c1", "e_c2", "e_m", "e_j1", "e_j2", "n_g1", "n_g2", "c_sigma1", "c_sigma2", "c_m",
        "c_g1", "c_g2", "c_p", "v_g1", "v_g2", "v_p", "e_charge"}},
      {"initial", {"xi"}},
      {"sweep", {"gamma", "e_m", "e_j1", "e_j2", "t_start", "t_end", "n_points"}},
      {"output", {"outputs", "plot", "title"}},
  };

  std::map<std::string, std::map<std::string, ConfigEntry>> sections;
  std::string current;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = detail::trim(line);
    const std::size_t hash = s.find('#');
    if (hash != std::string_view::npos) s = detail::trim(s.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": malformed section header");
      current = std::string(detail::trim(s.substr(1, s.size() - 2)));
      if (kSchema.find(current) == kSchema.end())
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": unknown section [" + current + "]");
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    if (current.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": key outside of any section");
    const std::string key{detail::trim(s.substr(0, eq))};
    const std::string value{detail::trim(s.substr(eq + 1))};
    const auto& allowed = kSchema.at(current);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "' in section [" + current + "]");
    if (!sections[current].emplace(key, ConfigEntry{value, line_no}).second)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": duplicate key '" +
                                  key + "' in section [" + current + "]");
  }

  SweepConfig cfg = default_sweep_config();

  auto entry = [&](const std::string& section, const std::string& key) -> const ConfigEntry* {
    const auto sec = sections.find(section);
    if (sec == sections.end()) return nullptr;
    const auto it = sec->second.find(key);
    return it == sec->second.end() ? nullptr : &it->second;
  };
  auto scalar = [&](const std::string& section, const std::string& key, double& out) {
    if (const ConfigEntry* e = entry(section, key)) out = detail::parse_number(e->value, e->line_no);
  };
  auto list = [&](const std::string& section, const std::string& key, std::vector<double>& out) {
    if (const ConfigEntry* e = entry(section, key)) {
      out.clear();
      for (const auto part : detail::split_list(e->value))
        out.push_back(detail::parse_number(part, e->line_no));
    }
  };

  // [model]: either direct energies or a capacitance network.
  const bool has_caps = entry("model", "c_sigma1") || entry("model", "c_sigma2") ||
                        entry("model", "c_m") || entry("model", "c_g1") || entry("model", "c_g2");
  if (has_caps) {
    for (const char* k : {"e_c1", "e_c2", "e_m", "n_g1", "n_g2"})
      if (entry("model", k))
        throw std::invalid_argument(std::string("config: key '") + k +
                                    "' conflicts with the capacitance form of [model]");
    CapacitanceSpec spec;
    scalar("model", "c_sigma1", spec.c_sigma1);
    scalar("model", "c_sigma2", spec.c_sigma2);
    scalar("model", "c_m", spec.c_m);
    scalar("model", "c_g1", spec.c_g1);
    scalar("model", "c_g2", spec.c_g2);
    scalar("model", "c_p", spec.c_p);
    scalar("model", "v_g1", spec.v_g1);
    scalar("model", "v_g2", spec.v_g2);
    scalar("model", "v_p", spec.v_p);
    scalar("model", "e_charge", spec.e_charge);
    double e_j1 = cfg.model.e_j1;
    double e_j2 = cfg.model.e_j2;
    scalar("model", "e_j1", e_j1);
    scalar("model", "e_j2", e_j2);
    cfg.model = energies_from_capacitances(spec, e_j1, e_j2);
  } else {
    scalar("model", "e_c1", cfg.model.e_c1);
    scalar("model", "e_c2", cfg.model.e_c2);
    scalar("model", "e_m", cfg.model.e_m);
    scalar("model", "e_j1", cfg.model.e_j1);
    scalar("model", "e_j2", cfg.model.e_j2);
    scalar("model", "n_g1", cfg.model.n_g1);
    scalar("model", "n_g2", cfg.model.n_g2);
  }
  cfg.e_m = {cfg.model.e_m};
  cfg.e_j1 = {cfg.model.e_j1};
  cfg.e_j2 = {cfg.model.e_j2};

  list("initial", "xi", cfg.xi);
  list("sweep", "gamma", cfg.gamma);
  list("sweep", "e_m", cfg.e_m);
  list("sweep", "e_j1", cfg.e_j1);
  list("sweep", "e_j2", cfg.e_j2);
  scalar("sweep", "t_start", cfg.t_grid.t_start);
  scalar("sweep", "t_end", cfg.t_grid.t_end);
  if (const detail::ConfigEntry* e = entry("sweep", "n_points")) {
    const double v = detail::parse_number(e->value, e->line_no);
    if (v != std::floor(v) || v < 2.0 || v > 1e9)
      throw std::invalid_argument("config line " + std::to_string(e->line_no) +
                                  ": n_points must be an integer >= 2");
    cfg.t_grid.n_points = static_cast<int>(v);
  }

  if (const detail::ConfigEntry* e = entry("output", "outputs")) {
    cfg.outputs.clear();
    for (const auto part : detail::split_list(e->value)) {
      if (part == "csv")
        cfg.outputs.push_back(OutputKind::csv);
      else if (part == "svg")
        cfg.outputs.push_back(OutputKind::svg);
      else if (part == "validate")
        cfg.outputs.push_back(OutputKind::validate);
      else
        throw std::invalid_argument("config line " + std::to_string(e->line_no) +
                                    ": outputs must be csv, svg or validate");
    }
  }
  if (const detail::ConfigEntry* e = entry("output", "plot")) {
    const std::string_view v = detail::trim(e->value);
    if (v == "lines")
      cfg.plot = PlotKind::lines;
    else if (v == "heatmap")
      cfg.plot = PlotKind::heatmap;
    else
      throw std::invalid_argument("config line " + std::to_string(e->line_no) +
                                  ": plot must be lines or heatmap");
  }
  if (const detail::ConfigEntry* e = entry("output", "title")) cfg.title = e->value;

  cfg.check();
  return cfg;
}

inline SweepConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace cpb
