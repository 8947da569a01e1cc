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

#include <random>

#include "cpb/density.hpp"
#include "cpb/eigen.hpp"
#include "cpb/matrix.hpp"

namespace cpbtest {

using cpb::cd;
using cpb::ComplexMatrix;

inline ComplexMatrix random_complex(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cd{g(rng), g(rng)};
  return m;
}

inline cpb::HermitianMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
  return cpb::hermitize(random_complex(rng, n));
}

inline cpb::HermitianMatrix random_real_symmetric(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
  return cpb::HermitianMatrix(std::move(m));
}

// G G^dagger / tr: positive semidefinite with unit trace.
inline cpb::DensityMatrix random_density(std::mt19937& rng, std::size_t n,
                                         cpb::BasisLabel basis) {
  ComplexMatrix g = random_complex(rng, n);
  ComplexMatrix p = g * g.adjoint();
  const double tr = p.trace().real();
  p *= cd{1.0 / tr, 0.0};
  return cpb::DensityMatrix(cpb::hermitize(p), basis);
}

// Eigenvectors of a random Hermitian matrix: a Haar-ish deterministic unitary.
inline ComplexMatrix random_unitary(std::mt19937& rng, std::size_t n) {
  return cpb::eig_hermitian(random_hermitian(rng, n)).vectors;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return c;
}

// Pure (|g1g2> + |e1e2>)/sqrt(2).
inline cpb::DensityMatrix bell_state() {
  ComplexMatrix m(4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return cpb::DensityMatrix(cpb::HermitianMatrix(std::move(m)), cpb::BasisLabel::joint4());
}

// Projector onto a basis state of an n-dimensional space.
inline cpb::DensityMatrix basis_projector(std::size_t n, std::size_t k, cpb::BasisLabel basis) {
  ComplexMatrix m(n);
  m(k, k) = 1.0;
  return cpb::DensityMatrix(cpb::HermitianMatrix(std::move(m)), basis);
}

}  // namespace cpbtest
