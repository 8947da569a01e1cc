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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <sstream>

#include "cpb/validate.hpp"

using cpb::SweepConfig;
using cpb::TimeGrid;
using cpb::ValidateOptions;

namespace {

SweepConfig small_grid() {
  SweepConfig cfg = cpb::default_sweep_config();
  cfg.gamma = {0.0, 0.1};
  cfg.xi = {M_PI / 2.0};
  cfg.e_m = {5.0};
  cfg.t_grid = TimeGrid{0.0, 2.0, 21};
  return cfg;
}

}  // namespace

TEST_CASE("default validation grid matches the documented layout") {
  const auto cfg = cpb::default_validation_config();
  CHECK(cfg.gamma == std::vector<double>{0.0, 0.01, 0.1, 0.5});
  CHECK(cfg.xi.size() == 3);
  CHECK(cfg.e_m == std::vector<double>{0.0, 1.0, 5.0});
  CHECK(cfg.e_j1 == std::vector<double>{30.0});
  CHECK(cfg.t_grid.n_points == 201);
  CHECK(cfg.grid_size() == 4 * 3 * 3 * 201);
}

TEST_CASE("a correct build passes the invariant suite on a small grid") {
  const auto report = cpb::validate(small_grid());
  CAPTURE(report.checks.size());
  for (const auto& c : report.checks) {
    INFO(c.name << ": " << c.max_violation << " vs " << c.tolerance);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
  REQUIRE(report.find("trace preservation") != nullptr);
  REQUIRE(report.find("propagator vs RK4 (subsample)") != nullptr);
  CHECK(report.find("propagator vs RK4 (subsample)")->tolerance > 0.0);
  CHECK(report.find("grid evaluation") == nullptr);
}

TEST_CASE("the corrupted-propagator negative control trips the purity check") {
  SweepConfig cfg = cpb::default_sweep_config();
  cfg.gamma = {0.01};
  cfg.xi = {M_PI / 2.0};
  cfg.e_m = {5.0};
  cfg.t_grid = TimeGrid{0.0, 0.5, 11};
  ValidateOptions opts;
  opts.corrupt_decay_sign = true;
  const auto report = cpb::validate(cfg, opts);
  CHECK_FALSE(report.all_pass());
  const auto* purity_check = report.find("purity monotonicity (gamma>0)");
  REQUIRE(purity_check != nullptr);
  CHECK_FALSE(purity_check->pass);
  CHECK(purity_check->max_violation > 1e-6);
}

TEST_CASE("the report prints one line per invariant") {
  const auto report = cpb::validate(small_grid());
  std::ostringstream os;
  report.print(os);
  const std::string text = os.str();
  CHECK(text.find("[PASS] trace preservation") != std::string::npos);
  CHECK(text.find("Araki-Lieb") != std::string::npos);
  CHECK(text.find("all invariants hold") != std::string::npos);
}

TEST_CASE("RK4 subsample agrees below 1e-8 on a gentle spectrum") {
  // With E_J = 3 the largest gap is about 6, so the h = 1e-3 integrator
  // tracks the closed form to well below 1e-8 over the subsample horizon.
  SweepConfig cfg = cpb::default_sweep_config();
  cfg.model.e_j1 = cfg.model.e_j2 = 3.0;
  cfg.e_j1 = {3.0};
  cfg.e_j2 = {3.0};
  cfg.e_m = {1.0};
  cfg.gamma = {0.0, 0.1};
  cfg.t_grid = TimeGrid{0.0, 2.0, 21};
  const auto report = cpb::validate(cfg);
  const auto* rk4 = report.find("propagator vs RK4 (subsample)");
  REQUIRE(rk4 != nullptr);
  CHECK(rk4->pass);
  CHECK(rk4->max_violation <= 1e-8);
}

TEST_CASE("gamma-zero-only grids skip the purity accumulator cleanly") {
  SweepConfig cfg = small_grid();
  cfg.gamma = {0.0};
  const auto report = cpb::validate(cfg);
  CHECK(report.all_pass());
  CHECK(report.find("purity monotonicity (gamma>0)")->max_violation == 0.0);
}
