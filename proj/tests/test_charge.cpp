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

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "cpb/charge.hpp"
#include "cpb/eigen.hpp"

using cpb::CapacitanceSpec;
using cpb::cd;
using cpb::QubitEnergies;

TEST_CASE("energies_from_capacitances: decoupled symmetric network") {
  CapacitanceSpec spec;
  spec.c_sigma1 = spec.c_sigma2 = 1.0;
  spec.c_m = 0.0;
  const auto p = cpb::energies_from_capacitances(spec, 0.0, 0.0);
  CHECK(p.e_c1 == Catch::Approx(2.0));
  CHECK(p.e_c2 == Catch::Approx(2.0));
  CHECK(p.e_m == 0.0);
}

TEST_CASE("energies_from_capacitances: coupled symmetric network") {
  CapacitanceSpec spec;
  spec.c_sigma1 = spec.c_sigma2 = 2.0;
  spec.c_m = 1.0;
  const auto p = cpb::energies_from_capacitances(spec, 3.0, 4.0);
  CHECK(p.e_c1 == Catch::Approx(4.0 / 3.0));
  CHECK(p.e_c2 == Catch::Approx(4.0 / 3.0));
  CHECK(p.e_m == Catch::Approx(4.0 / 3.0));
  CHECK(p.e_j1 == 3.0);  // pass-through
  CHECK(p.e_j2 == 4.0);
}

TEST_CASE("energies_from_capacitances: gate charge formula") {
  CapacitanceSpec spec;
  spec.c_sigma1 = spec.c_sigma2 = 2.0;
  spec.c_g1 = 1.0;
  spec.v_g1 = 1.0;
  spec.c_p = 0.0;
  const auto p = cpb::energies_from_capacitances(spec, 0.0, 0.0);
  CHECK(p.n_g1 == Catch::Approx(0.5));
}

TEST_CASE("energies_from_capacitances rejects singular geometry") {
  CapacitanceSpec spec;
  spec.c_sigma1 = spec.c_sigma2 = 1.0;
  spec.c_m = 1.0;  // denominator exactly zero
  CHECK_THROWS_AS(cpb::energies_from_capacitances(spec, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("eta at the co-degeneracy point") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 4.0;
  p.e_m = 1.0;
  p.n_g1 = p.n_g2 = 0.5;
  CHECK(cpb::eta(p, 0, 0) == Catch::Approx(2.25));
  CHECK(cpb::eta(p, 1, 1) == Catch::Approx(2.25));
  CHECK(cpb::eta(p, 1, 0) == Catch::Approx(1.75));
  CHECK(cpb::eta(p, 0, 1) == Catch::Approx(1.75));
}

TEST_CASE("QubitEnergies validation and regime flag") {
  QubitEnergies p;
  p.e_c1 = -1.0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p = QubitEnergies{};
  p.e_j1 = -0.5;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);

  p = QubitEnergies{};
  p.e_c1 = p.e_c2 = 100.0;
  p.e_j1 = p.e_j2 = 30.0;
  p.e_m = 5.0;
  CHECK(p.in_four_level_regime());
  p.e_j1 = 150.0;
  CHECK_FALSE(p.in_four_level_regime());
}

TEST_CASE("four-level Hamiltonian: no tunneling gives the eta diagonal") {
  QubitEnergies p;
  p.e_c1 = 3.0;
  p.e_c2 = 5.0;
  p.e_m = 0.7;
  p.n_g1 = 0.3;
  p.n_g2 = 0.6;
  const auto h = cpb::build_four_level_hamiltonian(p);
  CHECK(h(0, 0).real() == Catch::Approx(cpb::eta(p, 0, 0)));
  CHECK(h(1, 1).real() == Catch::Approx(cpb::eta(p, 0, 1)));
  CHECK(h(2, 2).real() == Catch::Approx(cpb::eta(p, 1, 0)));
  CHECK(h(3, 3).real() == Catch::Approx(cpb::eta(p, 1, 1)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(h(i, j)) == 0.0);
}

TEST_CASE("four-level Hamiltonian: degenerate diagonal at the symmetric point") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 100.0;
  p.e_m = 7.0;
  p.e_j1 = 30.0;
  p.e_j2 = 30.0;
  const auto h = cpb::build_four_level_hamiltonian(p);
  // eta(0,0) = eta(1,1) and eta(0,1) = eta(1,0) at n_g = (0.5, 0.5) with
  // equal charging energies; the e_m cross term splits the pairs.
  CHECK(h(0, 0).real() == Catch::Approx(h(3, 3).real()));
  CHECK(h(1, 1).real() == Catch::Approx(h(2, 2).real()));
  CHECK(h(0, 2).real() == Catch::Approx(-15.0));
  CHECK(h(0, 1).real() == Catch::Approx(-15.0));
}

TEST_CASE("four-level spectrum is symmetric under qubit exchange") {
  QubitEnergies p;
  p.e_c1 = 80.0;
  p.e_c2 = 120.0;
  p.e_m = 4.0;
  p.e_j1 = 10.0;
  p.e_j2 = 25.0;
  p.n_g1 = 0.45;
  p.n_g2 = 0.55;
  QubitEnergies q = p;
  std::swap(q.e_c1, q.e_c2);
  std::swap(q.e_j1, q.e_j2);
  std::swap(q.n_g1, q.n_g2);
  const auto ep = cpb::eig_hermitian(cpb::build_four_level_hamiltonian(p)).values;
  const auto eq = cpb::eig_hermitian(cpb::build_four_level_hamiltonian(q)).values;
  for (int k = 0; k < 4; ++k) CHECK(ep[k] == Catch::Approx(eq[k]).margin(1e-9));
}

TEST_CASE("lattice Hamiltonian: no tunneling gives a diagonal matrix of eta values") {
  QubitEnergies p;
  p.e_c1 = 2.0;
  p.e_c2 = 3.0;
  p.e_m = 0.5;
  p.n_g1 = 0.4;
  p.n_g2 = 0.5;
  const auto h = cpb::build_lattice_hamiltonian(p, 2);
  const int w = cpb::lattice_window(2);
  for (int n1 = -2; n1 <= 3; ++n1)
    for (int n2 = -2; n2 <= 3; ++n2) {
      const auto i = cpb::lattice_index(n1, n2, 2);
      CHECK(h(i, i).real() == Catch::Approx(cpb::eta(p, n1, n2)).margin(1e-12));
    }
  double offmax = 0.0;
  for (int i = 0; i < w * w; ++i)
    for (int j = 0; j < w * w; ++j)
      if (i != j) offmax = std::max(offmax, std::abs(h(i, j)));
  CHECK(offmax == 0.0);
}

TEST_CASE("lattice Hamiltonian: hop counts at n_max = 1") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 10.0;
  p.e_j1 = 2.0;  // hop element -1
  p.e_j2 = 4.0;  // hop element -2
  const auto h = cpb::build_lattice_hamiltonian(p, 1);
  const int w = cpb::lattice_window(1);  // 4
  int n_j1 = 0, n_j2 = 0;
  for (int i = 0; i < w * w; ++i)
    for (int j = 0; j < w * w; ++j) {
      if (i == j) continue;
      if (h(i, j).real() == -1.0) ++n_j1;
      if (h(i, j).real() == -2.0) ++n_j2;
    }
  // (w-1) * w directed hops per direction, times two for hermiticity.
  CHECK(n_j1 == 2 * (w - 1) * w);
  CHECK(n_j2 == 2 * (w - 1) * w);
}

TEST_CASE("lattice diagonal agrees with eta entrywise") {
  QubitEnergies p;
  p.e_c1 = 100.0;
  p.e_c2 = 90.0;
  p.e_m = 5.0;
  p.e_j1 = 30.0;
  p.e_j2 = 20.0;
  const auto h = cpb::build_lattice_hamiltonian(p, 3);
  for (int n1 = -3; n1 <= 4; ++n1)
    for (int n2 = -3; n2 <= 4; ++n2)
      CHECK(std::fabs(h(cpb::lattice_index(n1, n2, 3), cpb::lattice_index(n1, n2, 3)).real() -
                      cpb::eta(p, n1, n2)) <= 1e-12);
}

TEST_CASE("four-level Hamiltonian equals the lattice sub-block exactly") {
  QubitEnergies p;
  p.e_c1 = 100.0;
  p.e_c2 = 100.0;
  p.e_m = 1.0;
  p.e_j1 = 1.0;
  p.e_j2 = 1.0;
  const auto h4 = cpb::build_four_level_hamiltonian(p);
  const auto hl = cpb::build_lattice_hamiltonian(p, 3);
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int a2 = 0; a2 <= 1; ++a2)
      for (int b1 = 0; b1 <= 1; ++b1)
        for (int b2 = 0; b2 <= 1; ++b2) {
          const cd lhs = h4(2 * a1 + a2, 2 * b1 + b2);
          const cd rhs = hl(cpb::lattice_index(a1, a2, 3), cpb::lattice_index(b1, b2, 3));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("four lowest lattice eigenvalues match the four-level spectrum") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 100.0;
  p.e_m = 1.0;
  p.e_j1 = p.e_j2 = 1.0;
  const auto e4 = cpb::eig_hermitian(cpb::build_four_level_hamiltonian(p)).values;
  const auto el = cpb::eig_hermitian(cpb::build_lattice_hamiltonian(p, 3)).values;
  const double spread = e4.back() - e4.front();
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(el[k] - e4[k]) <= 0.02 * spread);
}

TEST_CASE("lattice spectrum is converged in the window size") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 100.0;
  p.e_m = 1.0;
  p.e_j1 = p.e_j2 = 1.0;
  const auto e3 = cpb::eig_hermitian(cpb::build_lattice_hamiltonian(p, 3)).values;
  const auto e5 = cpb::eig_hermitian(cpb::build_lattice_hamiltonian(p, 5)).values;
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(e3[k] - e5[k]) <= 1e-9);
}

TEST_CASE("lattice dimension guard") {
  QubitEnergies p;
  CHECK_THROWS_AS(cpb::build_lattice_hamiltonian(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(cpb::build_lattice_hamiltonian(p, 100), std::invalid_argument);
}

TEST_CASE("band structure: no tunneling gives min-selected parabolas") {
  QubitEnergies p;
  p.e_c1 = 4.0;
  p.e_c2 = 4.0;
  p.e_m = 0.0;
  const int n_max = 3;
  const auto bs = cpb::band_energies(p, {0.0, 0.2, 0.5, 0.8, 1.0}, 3, n_max);
  for (std::size_t i = 0; i < bs.n_g_grid.size(); ++i) {
    QubitEnergies q = p;
    q.n_g1 = q.n_g2 = bs.n_g_grid[i];
    std::vector<double> etas;
    for (int n1 = -n_max; n1 <= n_max + 1; ++n1)
      for (int n2 = -n_max; n2 <= n_max + 1; ++n2) etas.push_back(cpb::eta(q, n1, n2));
    std::sort(etas.begin(), etas.end());
    for (int k = 0; k < 3; ++k) CHECK(bs.bands[i][k] == Catch::Approx(etas[k]).margin(1e-10));
  }
}

TEST_CASE("band structure is 2e periodic") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 100.0;
  p.e_m = 1.0;
  p.e_j1 = p.e_j2 = 1.0;
  std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> shifted;
  for (double g : grid) shifted.push_back(g + 1.0);
  const auto b0 = cpb::band_energies(p, grid, 4, 4);
  const auto b1 = cpb::band_energies(p, shifted, 4, 4);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (int k = 0; k < 4; ++k) CHECK(std::fabs(b0.bands[i][k] - b1.bands[i][k]) <= 1e-6);
}

TEST_CASE("anticrossing: tunneling opens a gap at the degeneracy point") {
  QubitEnergies p;
  p.e_c1 = p.e_c2 = 100.0;
  p.e_m = 0.0;
  p.e_j1 = 5.0;
  p.e_j2 = 5.0;
  const auto bs = cpb::band_energies(p, {0.5}, 2, 3);
  CHECK(bs.bands[0][1] - bs.bands[0][0] > 0.1);

  // without tunneling the charge parabolas cross and the gap closes
  QubitEnergies q = p;
  q.e_j1 = q.e_j2 = 0.0;
  const auto bs0 = cpb::band_energies(q, {0.5}, 2, 3);
  CHECK(bs0.bands[0][1] - bs0.bands[0][0] <= 1e-12);
}

TEST_CASE("band_energies rejects too many levels") {
  QubitEnergies p;
  CHECK_THROWS_AS(cpb::band_energies(p, {0.5}, 1000, 1), std::invalid_argument);
}
