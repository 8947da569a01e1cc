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

#include "cpb/eigen.hpp"
#include "cpb/matrix.hpp"

namespace cpb {

/// Which basis a density matrix lives in. joint4 is the two-qubit charge
/// basis in the fixed order b0=|g1 g2>, b1=|g1 e2>, b2=|e1 g2>, b3=|e1 e2>
/// (|g> = zero excess Cooper pairs, |e> = one). lattice is the truncated
/// charge lattice |n1, n2> with n in {-n_max, ..., n_max+1}, row-major
/// over (n1, n2).
struct BasisLabel {
  enum class Kind { joint4, qubit_a, qubit_b, lattice };
  Kind kind = Kind::joint4;
  int n_max = 0;  // meaningful for lattice only

  static BasisLabel joint4() { return {Kind::joint4, 0}; }
  static BasisLabel qubit_a() { return {Kind::qubit_a, 0}; }
  static BasisLabel qubit_b() { return {Kind::qubit_b, 0}; }
  static BasisLabel lattice(int n_max) { return {Kind::lattice, n_max}; }

  std::size_t dim() const {
    switch (kind) {
      case Kind::joint4:
        return 4;
      case Kind::qubit_a:
      case Kind::qubit_b:
        return 2;
      case Kind::lattice: {
        const std::size_t w = 2 * static_cast<std::size_t>(n_max) + 2;
        return w * w;
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::joint4:
        return "joint4";
      case Kind::qubit_a:
        return "qubitA";
      case Kind::qubit_b:
        return "qubitB";
      case Kind::lattice:
        return "lattice(" + std::to_string(n_max) + ")";
    }
    return "?";
  }
};

/// Hermitian, unit-trace matrix over a declared basis. Construction checks
/// Hermiticity and |trace - 1| <= 1e-10; positive semidefiniteness (smallest
/// eigenvalue >= -1e-10) is part of the contract but is asserted by the
/// validation suite and the tests rather than re-diagonalizing on every
/// construction.
class DensityMatrix {
 public:
  DensityMatrix(HermitianMatrix m, BasisLabel basis) : m_(std::move(m)), basis_(basis) {
    if (m_.dim() != basis_.dim())
      throw std::invalid_argument("DensityMatrix: dimension does not match basis " + basis_.name());
    const double tr = m_.matrix().trace().real();
    if (std::fabs(tr - 1.0) > 1e-10)
      throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                  std::to_string(tr - 1.0));
  }

  std::size_t dim() const { return m_.dim(); }
  const BasisLabel& basis() const { return basis_; }
  const HermitianMatrix& hermitian() const { return m_; }
  const ComplexMatrix& matrix() const { return m_.matrix(); }
  const cd& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  double min_eigenvalue() const { return eig_hermitian(m_).values.front(); }

 private:
  HermitianMatrix m_;
  BasisLabel basis_;
};

enum class Subsystem { A, B };

/// Reduced state of one qubit of a joint4 density matrix. keep = A traces
/// out qubit 2, keep = B traces out qubit 1.
inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.basis().kind != BasisLabel::Kind::joint4)
    throw std::invalid_argument("partial_trace: expected joint4 basis, got " + rho.basis().name());
  ComplexMatrix r(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      cd sum{0.0, 0.0};
      for (std::size_t k = 0; k < 2; ++k) {
        // joint index = 2 * (qubit-1 state) + (qubit-2 state)
        if (keep == Subsystem::A)
          sum += rho(2 * i + k, 2 * j + k);
        else
          sum += rho(2 * k + i, 2 * k + j);
      }
      r(i, j) = sum;
    }
  }
  return DensityMatrix(hermitize(r),
                       keep == Subsystem::A ? BasisLabel::qubit_a() : BasisLabel::qubit_b());
}

/// Spectral entropy -sum_i lambda_i log2 lambda_i in bits, with the
/// convention 0 log 0 = 0. Eigenvalues below 1e-12 are clamped to zero so
/// that round-off noise (tiny negative eigenvalues) cannot produce NaN.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenSystem es = eig_hermitian(rho.hermitian());
  double s = 0.0;
  for (double lam : es.values) {
    if (lam < 1e-12) continue;
    s -= lam * std::log2(lam);
  }
  return s;
}

/// tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state.
inline double purity(const DensityMatrix& rho) {
  // For Hermitian rho, tr(rho^2) equals the squared Frobenius norm.
  return rho.matrix().frobenius_norm_sq();
}

}  // namespace cpb
