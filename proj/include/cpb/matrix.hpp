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
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpb {

using cd = std::complex<double>;

/// Dense complex square matrix, row-major storage.
/// This is the carrier type for Hamiltonians and density matrices; all
/// dimensions in this library are small (4 for the qubit pair, up to a
/// couple hundred for the charge lattice), so everything is plain dense
/// arithmetic.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cd{0.0, 0.0}) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
  }

  ComplexMatrix(std::size_t dim, std::initializer_list<cd> entries) : ComplexMatrix(dim) {
    if (entries.size() != dim * dim)
      throw std::invalid_argument("ComplexMatrix: entry count does not match dimension");
    std::copy(entries.begin(), entries.end(), a_.begin());
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  cd& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  cd trace() const {
    cd t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cd& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm_sq() const {
    double s = 0.0;
    for (const cd& v : a_) s += std::norm(v);
    return s;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }

  ComplexMatrix& operator*=(cd s) {
    for (cd& v : a_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cd s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cd s) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const cd aik = a(i, k);
        if (aik == cd{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  /// Largest |a_ij - b_ij|.
  friend double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.a_.size(); ++k) m = std::max(m, std::abs(a.a_[k] - b.a_[k]));
    return m;
  }

  bool all_real() const {
    for (const cd& v : a_)
      if (v.imag() != 0.0) return false;
    return true;
  }

 private:
  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  }

  std::size_t dim_;
  std::vector<cd> a_;
};

inline double hermiticity_defect(const ComplexMatrix& m) {
  double d = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

/// A complex matrix carrying the Hermiticity invariant
/// max |M_ij - conj(M_ji)| <= 1e-12 * (1 + max |M|), checked at construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    const double tol = 1e-12 * (1.0 + m_.max_abs());
    if (hermiticity_defect(m_) > tol)
      throw std::invalid_argument("HermitianMatrix: input is not Hermitian within tolerance");
  }

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  const cd& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

/// (M + M^dagger) / 2. The symmetric part of any square matrix; used to
/// restore exact Hermiticity after arithmetic that only preserves it up
/// to round-off.
inline HermitianMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix h(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return HermitianMatrix(std::move(h));
}

}  // namespace cpb
