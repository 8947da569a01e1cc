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
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpb/matrix.hpp"

namespace cpb {

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and a unitary matrix whose column k is the eigenvector for value k.
/// Eigenvector phases follow a fixed convention (the largest-magnitude
/// component of each column is real and positive), so the decomposition is
/// deterministic and reproducible bit-for-bit.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

namespace detail {

// Householder reduction of a real symmetric matrix to tridiagonal form,
// accumulating the orthogonal transformation in place. On exit `a` holds the
// transformation matrix Q, `d` the diagonal and `e` the subdiagonal
// (e[0] unused). Classic tred2.
inline void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                                std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (int j = 0; j < i; ++j) {
        double g = 0.0;
        for (int k = 0; k < i; ++k) g += at(i, k) * at(k, j);
        for (int k = 0; k < i; ++k) at(k, j) -= g * at(k, i);
      }
    }
    d[i] = at(i, i);
    at(i, i) = 1.0;
    for (int j = 0; j < i; ++j) at(j, i) = at(i, j) = 0.0;
  }
}

inline double pythag(double a, double b) {
  const double aa = std::fabs(a);
  const double ab = std::fabs(b);
  if (aa > ab) {
    const double r = ab / aa;
    return aa * std::sqrt(1.0 + r * r);
  }
  if (ab == 0.0) return 0.0;
  const double r = aa / ab;
  return ab * std::sqrt(1.0 + r * r);
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix, rotating the
// columns of `z` along. Classic tqli; throws on iteration-limit failure.
inline void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z,
                       int n) {
  auto zt = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw std::runtime_error("eig_hermitian: QL iteration limit reached for dimension " +
                                   std::to_string(n));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = pythag(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = zt(k, i + 1);
            zt(k, i + 1) = s * zt(k, i) + c * f;
            zt(k, i) = c * zt(k, i) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// One cyclic sweep of complex Jacobi rotations. Each pivot a(p,q) is
// phase-reduced to a real 2x2 problem and annihilated by the classic
// smaller-angle rotation. Returns the largest off-diagonal magnitude left
// after the sweep.
inline double jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const std::size_t n = a.dim();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const cd g = a(p, q);
      const double ag = std::abs(g);
      if (ag == 0.0) continue;

      const cd phase = g / ag;  // e^{i phi}
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double theta = (aqq - app) / (2.0 * ag);
      const double t =
          (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;

      // The full rotation is J = diag-embedded [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
      // acting as A <- J^dagger A J, V <- V J.
      const cd sp = s * std::conj(phase);
      const cd sq = s * phase;
      const cd cp = c * phase;
      const cd cpc = c * std::conj(phase);

      for (std::size_t k = 0; k < n; ++k) {
        const cd arp = a(p, k);
        const cd arq = a(q, k);
        a(p, k) = c * arp - sq * arq;
        a(q, k) = s * arp + cp * arq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const cd akp = a(k, p);
        const cd akq = a(k, q);
        a(k, p) = c * akp - sp * akq;
        a(k, q) = s * akp + cpc * akq;
        const cd vkp = v(k, p);
        const cd vkq = v(k, q);
        v(k, p) = c * vkp - sp * vkq;
        v(k, q) = s * vkp + cpc * vkq;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = cd{a(p, p).real(), 0.0};
      a(q, q) = cd{a(q, q).real(), 0.0};
    }
  }
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
  return off;
}

// Ascending sort plus the deterministic phase convention: the
// largest-magnitude component of every eigenvector is made real positive
// (ties resolved toward the smallest row index).
inline EigenSystem finalize(std::vector<double> values, const ComplexMatrix& vectors) {
  const std::size_t n = vectors.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = values[src];
    std::size_t rmax = 0;
    double amax = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double m = std::abs(vectors(r, src));
      if (m > amax) {
        amax = m;
        rmax = r;
      }
    }
    const cd ph = (amax > 0.0) ? std::conj(vectors(rmax, src)) / amax : cd{1.0, 0.0};
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = vectors(r, src) * ph;
  }
  return out;
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix. Real-symmetric input is
/// reduced by Householder transformations and solved by implicit-shift QL;
/// genuinely complex input goes through cyclic Jacobi rotations (that path
/// only ever sees small density matrices). Both paths are deterministic.
inline EigenSystem eig_hermitian(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 1) {
    ComplexMatrix v(1);
    v(0, 0) = 1.0;
    return EigenSystem{{h(0, 0).real()}, v};
  }

  if (h.matrix().all_real()) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = h(i, j).real();
    std::vector<double> d(n), e(n);
    detail::householder_tridiag(a, static_cast<int>(n), d, e);
    detail::tridiag_ql(d, e, a, static_cast<int>(n));
    ComplexMatrix v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v(i, j) = a[i * n + j];
    return detail::finalize(std::move(d), v);
  }

  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = 1e-14 * (1.0 + a.max_abs());
  constexpr int max_sweeps = 100;
  int sweep = 0;
  while (detail::jacobi_sweep(a, v) > stop) {
    if (++sweep >= max_sweeps)
      throw std::runtime_error("eig_hermitian: Jacobi sweep limit reached for dimension " +
                               std::to_string(n));
  }
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  return detail::finalize(std::move(d), v);
}

}  // namespace cpb
