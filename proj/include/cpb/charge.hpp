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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpb/eigen.hpp"
#include "cpb/matrix.hpp"

namespace cpb {

/// Device energy parameters of the coupled Cooper-pair-box pair, all in one
/// shared dimensionless energy unit (hbar = 1, time is scaled accordingly).
///
///   e_c1, e_c2  charging energies (> 0)
///   e_m         electrostatic coupling energy (any sign)
///   e_j1, e_j2  Josephson tunneling energies (>= 0)
///   n_g1, n_g2  normalized gate charges; the co-degeneracy point is 0.5
struct QubitEnergies {
  double e_c1 = 100.0;
  double e_c2 = 100.0;
  double e_m = 0.0;
  double e_j1 = 0.0;
  double e_j2 = 0.0;
  double n_g1 = 0.5;
  double n_g2 = 0.5;

  void check() const {
    if (!(e_c1 > 0.0) || !(e_c2 > 0.0))
      throw std::invalid_argument("QubitEnergies: charging energies must be positive");
    if (e_j1 < 0.0 || e_j2 < 0.0)
      throw std::invalid_argument("QubitEnergies: Josephson energies must be non-negative");
  }

  /// True in the charge regime E_J1, E_J2, |E_m| < min(E_c1, E_c2) where the
  /// four-level truncation is a good description. Outside it the four-level
  /// model is still constructed, but callers should surface a warning.
  bool in_four_level_regime() const {
    const double ec = std::min(e_c1, e_c2);
    return e_j1 < ec && e_j2 < ec && std::fabs(e_m) < ec;
  }
};

/// Capacitance network of the device. c_sigma1/2 are the total capacitances
/// attached to each box (including the coupling capacitor c_m); gate charges
/// come from the dc gate and shared pulse-gate voltages.
struct CapacitanceSpec {
  double c_sigma1 = 1.0;
  double c_sigma2 = 1.0;
  double c_m = 0.0;
  double c_g1 = 1.0;
  double c_g2 = 1.0;
  double c_p = 0.0;
  double v_g1 = 0.0;
  double v_g2 = 0.0;
  double v_p = 0.0;
  double e_charge = 1.0;

  void check() const {
    if (!(c_sigma1 > 0.0) || !(c_sigma2 > 0.0) || !(c_g1 > 0.0) || !(c_g2 > 0.0))
      throw std::invalid_argument("CapacitanceSpec: capacitances must be positive");
    if (c_m < 0.0 || c_p < 0.0)
      throw std::invalid_argument("CapacitanceSpec: c_m and c_p must be non-negative");
    if (!(e_charge > 0.0)) throw std::invalid_argument("CapacitanceSpec: e_charge must be positive");
  }
};

/// Charging and coupling energies of the capacitance network:
///   E_c1 = 4 e^2 C_sigma2 / (2 (C_sigma1 C_sigma2 - C_m^2))
///   E_c2 = 4 e^2 C_sigma1 / (2 (C_sigma1 C_sigma2 - C_m^2))
///   E_m  = 4 e^2 C_m / (C_sigma1 C_sigma2 - C_m^2)
///   n_g  = (C_g V_g + C_p V_p) / (2 e)
/// Josephson energies are pass-through inputs; the capacitance network does
/// not determine them.
inline QubitEnergies energies_from_capacitances(const CapacitanceSpec& spec, double e_j1,
                                                double e_j2) {
  spec.check();
  const double denom = spec.c_sigma1 * spec.c_sigma2 - spec.c_m * spec.c_m;
  if (!(denom > 0.0))
    throw std::invalid_argument(
        "energies_from_capacitances: singular geometry, C_sigma1*C_sigma2 - C_m^2 must be "
        "positive");
  const double e2 = spec.e_charge * spec.e_charge;
  QubitEnergies p;
  p.e_c1 = 4.0 * e2 * spec.c_sigma2 / (2.0 * denom);
  p.e_c2 = 4.0 * e2 * spec.c_sigma1 / (2.0 * denom);
  p.e_m = 4.0 * e2 * spec.c_m / denom;
  p.e_j1 = e_j1;
  p.e_j2 = e_j2;
  p.n_g1 = (spec.c_g1 * spec.v_g1 + spec.c_p * spec.v_p) / (2.0 * spec.e_charge);
  p.n_g2 = (spec.c_g2 * spec.v_g2 + spec.c_p * spec.v_p) / (2.0 * spec.e_charge);
  p.check();
  return p;
}

/// Electrostatic energy of the charge state |n1, n2>:
///   E_c1 (n_g1 - n1)^2 + E_c2 (n_g2 - n2)^2 + E_m (n_g1 - n1)(n_g2 - n2)
inline double eta(const QubitEnergies& p, int n1, int n2) {
  const double d1 = p.n_g1 - n1;
  const double d2 = p.n_g2 - n2;
  return p.e_c1 * d1 * d1 + p.e_c2 * d2 * d2 + p.e_m * d1 * d2;
}

/// Charge window used by the lattice Hamiltonian: n in {-n_max, ..., n_max+1},
/// centered so that both |0> and |1> sit away from the open boundary.
inline int lattice_window(int n_max) { return 2 * n_max + 2; }

inline std::size_t lattice_index(int n1, int n2, int n_max) {
  const int w = lattice_window(n_max);
  return static_cast<std::size_t>(n1 + n_max) * w + static_cast<std::size_t>(n2 + n_max);
}

/// Full charge-lattice Hamiltonian on the window above: diagonal eta(n1, n2),
/// hops -E_J1/2 in n1 and -E_J2/2 in n2, open boundary (hops leaving the
/// window are dropped). The single-sided hopping sum of the charge model is
/// completed with its conjugate terms, so each hop carries -E_J/2 in both
/// directions.
inline HermitianMatrix build_lattice_hamiltonian(const QubitEnergies& p, int n_max) {
  p.check();
  if (n_max < 1) throw std::invalid_argument("build_lattice_hamiltonian: n_max must be >= 1");
  const int w = lattice_window(n_max);
  if (static_cast<long>(w) * w > 200L * 200L)
    throw std::invalid_argument("build_lattice_hamiltonian: basis exceeds 200^2 states (n_max = " +
                                std::to_string(n_max) + ")");
  ComplexMatrix h(static_cast<std::size_t>(w) * w);
  for (int n1 = -n_max; n1 <= n_max + 1; ++n1) {
    for (int n2 = -n_max; n2 <= n_max + 1; ++n2) {
      const std::size_t i = lattice_index(n1, n2, n_max);
      h(i, i) = eta(p, n1, n2);
      if (n1 + 1 <= n_max + 1) {
        const std::size_t j = lattice_index(n1 + 1, n2, n_max);
        h(i, j) = h(j, i) = -0.5 * p.e_j1;
      }
      if (n2 + 1 <= n_max + 1) {
        const std::size_t j = lattice_index(n1, n2 + 1, n_max);
        h(i, j) = h(j, i) = -0.5 * p.e_j2;
      }
    }
  }
  return HermitianMatrix(std::move(h));
}

/// Four-level truncation to the charge states around the co-degeneracy point,
/// in the basis order b0=|00>, b1=|01>, b2=|10>, b3=|11>. Equal by
/// construction to the corresponding 4x4 sub-block of the lattice
/// Hamiltonian.
inline HermitianMatrix build_four_level_hamiltonian(const QubitEnergies& p) {
  p.check();
  ComplexMatrix h(4);
  h(0, 0) = eta(p, 0, 0);
  h(1, 1) = eta(p, 0, 1);
  h(2, 2) = eta(p, 1, 0);
  h(3, 3) = eta(p, 1, 1);
  h(0, 2) = h(2, 0) = h(1, 3) = h(3, 1) = -0.5 * p.e_j1;  // qubit-1 tunneling
  h(0, 1) = h(1, 0) = h(2, 3) = h(3, 2) = -0.5 * p.e_j2;  // qubit-2 tunneling
  return HermitianMatrix(std::move(h));
}

/// Lowest eigenvalues of the lattice Hamiltonian along a gate-charge sweep
/// with n_g1 = n_g2 = grid value. bands[i] holds the `levels` lowest
/// eigenvalues (ascending) at grid point i.
struct BandStructure {
  std::vector<double> n_g_grid;
  std::vector<std::vector<double>> bands;
};

inline BandStructure band_energies(const QubitEnergies& p, std::vector<double> n_g_grid,
                                   int levels, int n_max) {
  if (levels < 1) throw std::invalid_argument("band_energies: levels must be >= 1");
  const int w = lattice_window(n_max);
  if (static_cast<long>(levels) > static_cast<long>(w) * w)
    throw std::invalid_argument("band_energies: levels exceeds the lattice dimension");
  BandStructure bs;
  bs.n_g_grid = std::move(n_g_grid);
  bs.bands.reserve(bs.n_g_grid.size());
  for (double ng : bs.n_g_grid) {
    QubitEnergies q = p;
    q.n_g1 = ng;
    q.n_g2 = ng;
    const EigenSystem es = eig_hermitian(build_lattice_hamiltonian(q, n_max));
    bs.bands.emplace_back(es.values.begin(), es.values.begin() + levels);
  }
  return bs;
}

}  // namespace cpb
