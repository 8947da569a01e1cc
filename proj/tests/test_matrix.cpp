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

#include "cpb/matrix.hpp"
#include "helpers.hpp"

using cpb::cd;
using cpb::ComplexMatrix;
using cpb::HermitianMatrix;

TEST_CASE("hermitize: identity is a fixed point") {
  const auto h = cpb::hermitize(ComplexMatrix::identity(3));
  CHECK(max_abs_diff(h.matrix(), ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("hermitize symmetrizes a one-sided matrix") {
  ComplexMatrix m(2, {cd{0, 0}, cd{1, 0}, cd{0, 0}, cd{0, 0}});
  const auto h = cpb::hermitize(m);
  CHECK(h(0, 1) == cd{0.5, 0.0});
  CHECK(h(1, 0) == cd{0.5, 0.0});
  CHECK(h(0, 0) == cd{0.0, 0.0});
  CHECK(h(1, 1) == cd{0.0, 0.0});
}

TEST_CASE("hermitize leaves a Hermitian matrix unchanged") {
  ComplexMatrix m(2, {cd{2, 0}, cd{0, 1}, cd{0, -1}, cd{2, 0}});
  const auto h = cpb::hermitize(m);
  CHECK(max_abs_diff(h.matrix(), m) == 0.0);
}

TEST_CASE("HermitianMatrix rejects non-Hermitian input") {
  ComplexMatrix m(2, {cd{0, 0}, cd{1, 0}, cd{0, 0}, cd{0, 0}});
  CHECK_THROWS_AS(HermitianMatrix(m), std::invalid_argument);
  // within tolerance is fine
  ComplexMatrix ok(2, {cd{1, 0}, cd{0.5, 1e-14}, cd{0.5, -1e-14}, cd{1, 0}});
  CHECK_NOTHROW(HermitianMatrix(ok));
}

TEST_CASE("ComplexMatrix basics") {
  CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(2, {cd{1, 0}}), std::invalid_argument);

  std::mt19937 rng(7);
  const ComplexMatrix a = cpbtest::random_complex(rng, 5);
  const ComplexMatrix b = cpbtest::random_complex(rng, 5);

  SECTION("adjoint of a product reverses order") {
    CHECK(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()) < 1e-12);
  }
  SECTION("trace is linear and cyclic") {
    const cd t1 = (a * b).trace();
    const cd t2 = (b * a).trace();
    CHECK(std::abs(t1 - t2) < 1e-12);
  }
  SECTION("identity is neutral") {
    CHECK(max_abs_diff(a * ComplexMatrix::identity(5), a) == 0.0);
  }
}
