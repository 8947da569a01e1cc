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
#include <random>

#include "cpb/eigen.hpp"
#include "helpers.hpp"

using cpb::cd;
using cpb::ComplexMatrix;
using cpb::EigenSystem;
using cpb::HermitianMatrix;

namespace {

ComplexMatrix reconstruct(const EigenSystem& es) {
  const std::size_t n = es.vectors.dim();
  ComplexMatrix lam(n);
  for (std::size_t i = 0; i < n; ++i) lam(i, i) = es.values[i];
  return es.vectors * lam * es.vectors.adjoint();
}

void check_decomposition(const HermitianMatrix& h, const EigenSystem& es) {
  const std::size_t n = h.dim();
  const double scale = 1.0 + h.matrix().max_abs();

  // ascending order
  for (std::size_t i = 1; i < n; ++i) CHECK(es.values[i - 1] <= es.values[i]);

  // residual H U = U diag
  CHECK(max_abs_diff(reconstruct(es), h.matrix()) <= 1e-10 * scale);

  // unitarity
  CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(n)) <= 1e-10);

  // trace and Frobenius identities
  double sum = 0.0, sum2 = 0.0;
  for (double v : es.values) {
    sum += v;
    sum2 += v * v;
  }
  const double tr = h.matrix().trace().real();
  const double fro = h.matrix().frobenius_norm_sq();
  CHECK(std::fabs(sum - tr) <= 1e-9 * n * std::max(1.0, std::fabs(tr)));
  CHECK(std::fabs(sum2 - fro) <= 1e-9 * n * std::max(1.0, fro));

  // phase convention: largest component of each column real positive
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t rmax = 0;
    double amax = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double m = std::abs(es.vectors(r, k));
      if (m > amax) {
        amax = m;
        rmax = r;
      }
    }
    CHECK(es.vectors(rmax, k).real() > 0.0);
    CHECK(std::fabs(es.vectors(rmax, k).imag()) <= 1e-12 * amax);
  }
}

}  // namespace

TEST_CASE("eig_hermitian: diagonal matrix") {
  ComplexMatrix m(4);
  m(0, 0) = 4.0;
  m(1, 1) = 1.0;
  m(2, 2) = 3.0;
  m(3, 3) = 2.0;
  const auto es = cpb::eig_hermitian(HermitianMatrix(m));
  CHECK(es.values == std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("eig_hermitian: 2x2 sigma_x") {
  ComplexMatrix m(2, {cd{0, 0}, cd{1, 0}, cd{1, 0}, cd{0, 0}});
  const auto es = cpb::eig_hermitian(HermitianMatrix(m));
  CHECK(es.values[0] == Catch::Approx(-1.0).margin(1e-14));
  CHECK(es.values[1] == Catch::Approx(1.0).margin(1e-14));
  check_decomposition(HermitianMatrix(m), es);
}

TEST_CASE("eig_hermitian: random complex Hermitian matrices") {
  std::mt19937 rng(1234);
  for (std::size_t n : {2u, 3u, 4u, 8u, 16u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto h = cpbtest::random_hermitian(rng, n);
      check_decomposition(h, cpb::eig_hermitian(h));
    }
  }
}

TEST_CASE("eig_hermitian: random real symmetric matrices (QL path)") {
  std::mt19937 rng(99);
  for (std::size_t n : {2u, 5u, 8u, 25u, 60u}) {
    const auto h = cpbtest::random_real_symmetric(rng, n);
    check_decomposition(h, cpb::eig_hermitian(h));
  }
}

TEST_CASE("eig_hermitian: real and complex paths agree") {
  std::mt19937 rng(5);
  const auto h = cpbtest::random_real_symmetric(rng, 9);
  const auto real_es = cpb::eig_hermitian(h);

  // Nudge one off-diagonal pair into the complex plane by a negligible
  // amount to force the Jacobi path.
  ComplexMatrix m = h.matrix();
  m(0, 1) += cd{0.0, 1e-30};
  m(1, 0) -= cd{0.0, 1e-30};
  const auto complex_es = cpb::eig_hermitian(HermitianMatrix(m));

  for (std::size_t i = 0; i < 9; ++i)
    CHECK(real_es.values[i] == Catch::Approx(complex_es.values[i]).margin(1e-11));
}

TEST_CASE("eig_hermitian: degenerate spectra stay orthonormal") {
  std::mt19937 rng(21);
  // U diag(1,1,2,2) U^dagger has two two-fold degeneracies.
  const ComplexMatrix u = cpbtest::random_unitary(rng, 4);
  ComplexMatrix lam(4);
  lam(0, 0) = lam(1, 1) = 1.0;
  lam(2, 2) = lam(3, 3) = 2.0;
  const auto h = cpb::hermitize(u * lam * u.adjoint());
  check_decomposition(h, cpb::eig_hermitian(h));
}

TEST_CASE("eig_hermitian is deterministic") {
  std::mt19937 rng(77);
  const auto h = cpbtest::random_hermitian(rng, 6);
  const auto a = cpb::eig_hermitian(h);
  const auto b = cpb::eig_hermitian(h);
  CHECK(a.values == b.values);
  CHECK(max_abs_diff(a.vectors, b.vectors) == 0.0);
}

TEST_CASE("eig_hermitian: dimension one") {
  ComplexMatrix m(1);
  m(0, 0) = -3.5;
  const auto es = cpb::eig_hermitian(HermitianMatrix(m));
  CHECK(es.values == std::vector<double>{-3.5});
  CHECK(es.vectors(0, 0) == cd{1.0, 0.0});
}
