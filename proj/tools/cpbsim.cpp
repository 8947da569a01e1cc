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

// Command-line front end: single trajectories, parameter sweeps, charge
// bands, four-level versus lattice comparison, and the invariant suite.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 validation
// failure, 3 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cpb/cpb.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct ModelFlags {
  double e_c1 = 100.0;
  double e_c2 = 100.0;
  double e_m = 5.0;
  double e_j1 = 30.0;
  double e_j2 = 30.0;
  double n_g1 = 0.5;
  double n_g2 = 0.5;

  void attach(CLI::App* cmd) {
    cmd->add_option("--e-c1", e_c1, "charging energy of qubit 1");
    cmd->add_option("--e-c2", e_c2, "charging energy of qubit 2");
    cmd->add_option("--e-m", e_m, "coupling energy");
    cmd->add_option("--e-j1", e_j1, "Josephson energy of qubit 1");
    cmd->add_option("--e-j2", e_j2, "Josephson energy of qubit 2");
    cmd->add_option("--n-g1", n_g1, "gate charge of qubit 1");
    cmd->add_option("--n-g2", n_g2, "gate charge of qubit 2");
  }

  cpb::QubitEnergies to_model() const {
    cpb::QubitEnergies p;
    p.e_c1 = e_c1;
    p.e_c2 = e_c2;
    p.e_m = e_m;
    p.e_j1 = e_j1;
    p.e_j2 = e_j2;
    p.n_g1 = n_g1;
    p.n_g2 = n_g2;
    p.check();
    return p;
  }
};

fs::path prepare_out_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw cpb::IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void warn_if_outside_regime(const cpb::SweepResult& res) {
  if (res.regime_warning)
    std::cerr << "warning: some grid points leave the charge regime "
                 "E_J, |E_m| < E_c; the four-level truncation may be inaccurate there\n";
}

void apply_format_override(cpb::SweepConfig& cfg, const std::string& format) {
  if (format.empty()) return;
  std::vector<cpb::OutputKind> keep;
  for (auto k : cfg.outputs)
    if (k == cpb::OutputKind::validate) keep.push_back(k);
  if (format == "csv" || format == "both") keep.push_back(cpb::OutputKind::csv);
  if (format == "svg" || format == "both") keep.push_back(cpb::OutputKind::svg);
  cfg.outputs = keep;
}

int emit_sweep_outputs(const cpb::SweepConfig& cfg, const cpb::SweepResult& res,
                       const fs::path& dir, const std::string& stem) {
  int rc = kExitOk;
  for (auto kind : cfg.outputs) {
    switch (kind) {
      case cpb::OutputKind::csv: {
        const fs::path p = dir / (stem + ".csv");
        cpb::write_csv(res, p.string());
        std::cout << "wrote " << p.string() << "\n";
        break;
      }
      case cpb::OutputKind::svg: {
        const fs::path p = dir / (stem + ".svg");
        cpb::render_svg(res, cfg.plot, p.string());
        std::cout << "wrote " << p.string() << "\n";
        break;
      }
      case cpb::OutputKind::validate: {
        const auto report = cpb::validate(cfg);
        report.print(std::cout);
        if (!report.all_pass()) rc = kExitValidation;
        break;
      }
    }
  }
  return rc;
}

int run_simulate(const ModelFlags& flags, double xi, double gamma, double t_start, double t_end,
                 int points, const std::string& out, const std::string& format) {
  cpb::SweepConfig cfg = cpb::default_sweep_config();
  cfg.model = flags.to_model();
  cfg.xi = {xi};
  cfg.gamma = {gamma};
  cfg.e_m = {cfg.model.e_m};
  cfg.e_j1 = {cfg.model.e_j1};
  cfg.e_j2 = {cfg.model.e_j2};
  cfg.t_grid = cpb::TimeGrid{t_start, t_end, points};
  cfg.outputs = {cpb::OutputKind::csv};
  apply_format_override(cfg, format);
  cfg.check();

  const auto res = cpb::run_sweep(cfg, 1);
  warn_if_outside_regime(res);
  const auto dir = prepare_out_dir(out);
  return emit_sweep_outputs(cfg, res, dir, "trajectory");
}

int run_sweep_cmd(const std::string& config_path, const std::string& out, int workers,
                  const std::string& format) {
  cpb::SweepConfig cfg =
      config_path.empty() ? cpb::default_sweep_config() : cpb::load_config_file(config_path);
  apply_format_override(cfg, format);
  cfg.check();

  const auto res = cpb::run_sweep(cfg, workers);
  warn_if_outside_regime(res);
  const auto dir = prepare_out_dir(out);
  return emit_sweep_outputs(cfg, res, dir, "sweep");
}

int run_bands(const ModelFlags& flags, double ng_min, double ng_max, int grid_points, int levels,
              int n_max, const std::string& out, const std::string& format) {
  const cpb::QubitEnergies model = flags.to_model();
  if (grid_points < 2) throw std::invalid_argument("bands: --grid-points must be >= 2");
  std::vector<double> grid(grid_points);
  for (int i = 0; i < grid_points; ++i)
    grid[i] =
        ng_min + (ng_max - ng_min) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
  const auto bs = cpb::band_energies(model, grid, levels, n_max);

  const auto dir = prepare_out_dir(out);
  if (format.empty() || format == "csv" || format == "both") {
    const fs::path p = dir / "bands.csv";
    std::ofstream os(p, std::ios::binary);
    if (!os) throw cpb::IoError("cannot open for writing: " + p.string());
    os << "n_g";
    for (int k = 0; k < levels; ++k) os << ",E_" << k;
    os << "\n";
    for (std::size_t i = 0; i < bs.n_g_grid.size(); ++i) {
      os << cpb::format_double17(bs.n_g_grid[i]);
      for (int k = 0; k < levels; ++k) os << ',' << cpb::format_double17(bs.bands[i][k]);
      os << "\n";
    }
    if (!os) throw cpb::IoError("write failed: " + p.string());
    std::cout << "wrote " << p.string() << "\n";
  }
  if (format == "svg" || format == "both") {
    cpb::LineChart chart;
    chart.title = "charge bands";
    chart.x_label = "gate charge n_g";
    chart.y_label = "energy";
    for (int k = 0; k < levels; ++k) {
      cpb::Series s;
      s.label = "E_" + std::to_string(k);
      s.x = bs.n_g_grid;
      for (const auto& band : bs.bands) s.y.push_back(band[k]);
      chart.series.push_back(std::move(s));
    }
    const fs::path p = dir / "bands.svg";
    std::ofstream os(p, std::ios::binary);
    if (!os) throw cpb::IoError("cannot open for writing: " + p.string());
    os << chart.render();
    if (!os) throw cpb::IoError("write failed: " + p.string());
    std::cout << "wrote " << p.string() << "\n";
  }
  return kExitOk;
}

int run_compare_lattice(const ModelFlags& flags, int n_max) {
  const cpb::QubitEnergies model = flags.to_model();
  const auto e4 = cpb::eig_hermitian(cpb::build_four_level_hamiltonian(model)).values;
  const auto el = cpb::eig_hermitian(cpb::build_lattice_hamiltonian(model, n_max)).values;
  const double spread = e4.back() - e4.front();
  if (!model.in_four_level_regime())
    std::cerr << "warning: parameters leave the charge regime E_J, |E_m| < E_c\n";

  const int dim = cpb::lattice_window(n_max) * cpb::lattice_window(n_max);
  std::printf("four-level spectrum vs the four lowest lattice levels (n_max = %d, dim = %d)\n",
              n_max, dim);
  std::printf("%3s %22s %22s %14s %12s\n", "k", "four-level", "lattice", "|diff|", "diff/spread");
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double diff = std::fabs(el[k] - e4[k]);
    const double rel = spread > 0.0 ? diff / spread : 0.0;
    worst = std::max(worst, rel);
    std::printf("%3d %22.15g %22.15g %14.6e %12.4e\n", k, e4[k], el[k], diff, rel);
  }
  std::printf("largest deviation: %.4e of the four-level spectral spread\n", worst);
  return kExitOk;
}

int run_validate_cmd(const std::string& config_path) {
  const cpb::SweepConfig cfg =
      config_path.empty() ? cpb::default_validation_config() : cpb::load_config_file(config_path);
  const auto report = cpb::validate(cfg);
  report.print(std::cout);
  return report.all_pass() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled Cooper-pair-box simulator: charge-qubit dynamics under phase "
               "decoherence and quantum mutual entropy"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::string config_path;
  std::string format;
  int workers = 1;

  auto* simulate = app.add_subcommand("simulate", "single trajectory of the correlation record");
  ModelFlags sim_model;
  sim_model.attach(simulate);
  double xi = M_PI / 2.0, gamma = 0.0, t_start = 0.0, t_end = 20.0;
  int points = 201;
  simulate->add_option("--xi", xi, "initial mixing angle in [0, pi]");
  simulate->add_option("--gamma", gamma, "phase decoherence rate");
  simulate->add_option("--t-start", t_start, "first sample time");
  simulate->add_option("--t-end", t_end, "last sample time");
  simulate->add_option("--points", points, "number of samples");
  simulate->add_option("--out", out_dir, "output directory");
  simulate->add_option("--format", format, "csv|svg|both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));

  auto* sweep = app.add_subcommand("sweep", "run a declarative parameter sweep");
  sweep->add_option("--config", config_path, "sweep configuration file");
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--format", format, "csv|svg|both (overrides config outputs)")
      ->check(CLI::IsMember({"csv", "svg", "both"}));

  auto* bands = app.add_subcommand("bands", "gate-charge band structure of the charge lattice");
  ModelFlags bands_model;
  bands_model.attach(bands);
  double ng_min = 0.0, ng_max = 2.0;
  int grid_points = 101, levels = 4, n_max = 4;
  bands->add_option("--ng-min", ng_min, "first gate charge");
  bands->add_option("--ng-max", ng_max, "last gate charge");
  bands->add_option("--grid-points", grid_points, "gate charge samples");
  bands->add_option("--levels", levels, "number of bands")->check(CLI::PositiveNumber);
  bands->add_option("--n-max", n_max, "charge window half-width")->check(CLI::PositiveNumber);
  bands->add_option("--out", out_dir, "output directory");
  bands->add_option("--format", format, "csv|svg|both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));

  auto* cmp = app.add_subcommand("compare-lattice",
                                 "four-level spectrum against the charge-lattice spectrum");
  ModelFlags cmp_model;
  cmp_model.attach(cmp);
  int cmp_n_max = 4;
  cmp->add_option("--n-max", cmp_n_max, "charge window half-width")->check(CLI::PositiveNumber);

  auto* val = app.add_subcommand("validate", "run the invariant suite over a sweep grid");
  val->add_option("--config", config_path, "sweep configuration file (default grid if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed())
      return run_simulate(sim_model, xi, gamma, t_start, t_end, points, out_dir, format);
    if (sweep->parsed()) return run_sweep_cmd(config_path, out_dir, workers, format);
    if (bands->parsed())
      return run_bands(bands_model, ng_min, ng_max, grid_points, levels, n_max, out_dir, format);
    if (cmp->parsed()) return run_compare_lattice(cmp_model, cmp_n_max);
    if (val->parsed()) return run_validate_cmd(config_path);
  } catch (const cpb::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
