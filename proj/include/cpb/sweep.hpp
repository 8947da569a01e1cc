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

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cpb/charge.hpp"
#include "cpb/dynamics.hpp"
#include "cpb/entropy.hpp"

namespace cpb {

/// Uniform time grid t_start .. t_end with n_points samples (both endpoints
/// included). at(i) is a pure function of (i, bounds), so every caller sees
/// bit-identical sample times.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 20.0;
  int n_points = 201;

  double at(int i) const {
    if (i == n_points - 1) return t_end;
    return t_start + (t_end - t_start) * static_cast<double>(i) /
                         static_cast<double>(n_points - 1);
  }
};

enum class OutputKind { csv, svg, validate };
enum class PlotKind { lines, heatmap };

/// One point of the parameter grid, decoded from a flat combo index.
struct ComboParams {
  double e_m = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double e_j1 = 0.0;
  double e_j2 = 0.0;
};

/// Declarative parameter sweep: a base device model plus one value list per
/// sweep axis. The axes e_m, e_j1 and e_j2 override the corresponding model
/// fields point by point. Everything is deterministic; there is no random
/// state anywhere in a sweep.
///
/// Grid order is lexicographic with e_m as the slowest axis, then gamma, xi,
/// e_j1, e_j2, and time innermost, so each trajectory occupies a contiguous
/// block of rows.
struct SweepConfig {
  QubitEnergies model;
  std::vector<double> xi{M_PI / 2.0};
  std::vector<double> gamma{0.0};
  std::vector<double> e_m{5.0};
  std::vector<double> e_j1{30.0};
  std::vector<double> e_j2{30.0};
  TimeGrid t_grid;
  std::vector<OutputKind> outputs{OutputKind::csv};
  PlotKind plot = PlotKind::lines;
  std::string title;

  void check() const {
    model.check();
    if (xi.empty() || gamma.empty() || e_m.empty() || e_j1.empty() || e_j2.empty())
      throw std::invalid_argument("SweepConfig: every axis needs at least one value");
    for (double x : xi)
      if (!(x >= 0.0 && x <= M_PI))
        throw std::invalid_argument("SweepConfig: xi values must lie in [0, pi]");
    for (double g : gamma)
      if (g < 0.0) throw std::invalid_argument("SweepConfig: gamma values must be >= 0");
    for (double e : e_j1)
      if (e < 0.0) throw std::invalid_argument("SweepConfig: e_j1 values must be >= 0");
    for (double e : e_j2)
      if (e < 0.0) throw std::invalid_argument("SweepConfig: e_j2 values must be >= 0");
    if (!(cfg_time_ok()))
      throw std::invalid_argument(
          "SweepConfig: time grid needs t_end > t_start >= 0 and n_points >= 2");
    if (grid_size() > 10000000ULL)
      throw std::invalid_argument("SweepConfig: grid exceeds the 1e7-point guard (" +
                                  std::to_string(grid_size()) + " points)");
  }

  std::size_t combo_count() const {
    return e_m.size() * gamma.size() * xi.size() * e_j1.size() * e_j2.size();
  }
  std::size_t grid_size() const { return combo_count() * static_cast<std::size_t>(t_grid.n_points); }

  ComboParams combo(std::size_t index) const {
    ComboParams c;
    c.e_j2 = e_j2[index % e_j2.size()];
    index /= e_j2.size();
    c.e_j1 = e_j1[index % e_j1.size()];
    index /= e_j1.size();
    c.xi = xi[index % xi.size()];
    index /= xi.size();
    c.gamma = gamma[index % gamma.size()];
    index /= gamma.size();
    c.e_m = e_m[index % e_m.size()];
    return c;
  }

  QubitEnergies model_for(const ComboParams& c) const {
    QubitEnergies q = model;
    q.e_m = c.e_m;
    q.e_j1 = c.e_j1;
    q.e_j2 = c.e_j2;
    return q;
  }

 private:
  bool cfg_time_ok() const {
    return t_grid.t_start >= 0.0 && t_grid.t_end > t_grid.t_start && t_grid.n_points >= 2;
  }
};

/// One result row: the grid coordinates followed by every observable of the
/// correlation record, flattened to sixteen doubles in the CSV column order.
struct SweepRow {
  double t = 0.0;
  double e_m = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double e_j1 = 0.0;
  double e_j2 = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double mutual = 0.0;
  double purity = 0.0;
  double energy = 0.0;
  double p_gg = 0.0;
  double p_ge = 0.0;
  double p_eg = 0.0;
  double p_ee = 0.0;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  bool regime_warning = false;  // some grid point left E_J, |E_m| < E_c
};

namespace detail {

inline void run_combo(const SweepConfig& cfg, std::size_t combo_index, SweepResult& out) {
  const ComboParams c = cfg.combo(combo_index);
  try {
    const QubitEnergies q = cfg.model_for(c);
    const HermitianMatrix h = build_four_level_hamiltonian(q);
    const Propagator prop(h, c.gamma);
    const DensityMatrix rho0 = make_initial_state({c.xi});
    const int nt = cfg.t_grid.n_points;
    for (int it = 0; it < nt; ++it) {
      const double t = cfg.t_grid.at(it);
      const CorrelationRecord rec = observe(h, evolve(prop, rho0, t), t);
      SweepRow& row = out.rows[combo_index * nt + it];
      row.t = t;
      row.e_m = c.e_m;
      row.gamma = c.gamma;
      row.xi = c.xi;
      row.e_j1 = c.e_j1;
      row.e_j2 = c.e_j2;
      row.s_a = rec.s_a;
      row.s_b = rec.s_b;
      row.s_ab = rec.s_ab;
      row.mutual = rec.mutual;
      row.purity = rec.purity;
      row.energy = rec.energy;
      row.p_gg = rec.populations[0];
      row.p_ge = rec.populations[1];
      row.p_eg = rec.populations[2];
      row.p_ee = rec.populations[3];
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("sweep point (e_m=" + std::to_string(c.e_m) +
                             ", gamma=" + std::to_string(c.gamma) + ", xi=" + std::to_string(c.xi) +
                             ", e_j1=" + std::to_string(c.e_j1) +
                             ", e_j2=" + std::to_string(c.e_j2) + "): " + e.what());
  }
}

}  // namespace detail

/// Evaluate the whole grid. Each combo builds its four-level Hamiltonian and
/// propagator once and walks the time grid from the fixed initial state.
/// Combos are independent, so they may be distributed over a worker pool;
/// every row is written by exactly one worker at its own grid index, and the
/// result is bit-identical for any worker count.
inline SweepResult run_sweep(const SweepConfig& cfg, int workers = 1) {
  cfg.check();
  SweepResult out;
  out.config = cfg;
  out.rows.resize(cfg.grid_size());

  const std::size_t combos = cfg.combo_count();
  for (std::size_t i = 0; i < combos; ++i)
    if (!cfg.model_for(cfg.combo(i)).in_four_level_regime()) out.regime_warning = true;

  if (workers < 1) workers = 1;
  const std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(workers), combos);
  if (pool <= 1) {
    for (std::size_t i = 0; i < combos; ++i) detail::run_combo(cfg, i, out);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(pool);
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (std::size_t w = 0; w < pool; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < combos; i = next.fetch_add(1))
          detail::run_combo(cfg, i, out);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cpb
