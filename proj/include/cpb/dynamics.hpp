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
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "cpb/density.hpp"
#include "cpb/eigen.hpp"
#include "cpb/matrix.hpp"

namespace cpb {

/// Mixing angle of the initial two-qubit state
///   rho0 = cos^2(xi/2) |e1 e2><e1 e2| + sin^2(xi/2) |g1 g2><g1 g2|,
/// xi in [0, pi]. xi = 0 is the pure upper state, xi = pi the pure ground
/// state, xi = pi/2 the evenly weighted (maximally correlated) mixture.
struct InitialStateSpec {
  double xi = M_PI / 2.0;
};

inline DensityMatrix make_initial_state(const InitialStateSpec& s) {
  if (!(s.xi >= 0.0 && s.xi <= M_PI))
    throw std::invalid_argument("make_initial_state: xi must lie in [0, pi]");
  const double ch = std::cos(0.5 * s.xi);
  const double sh = std::sin(0.5 * s.xi);
  ComplexMatrix m(4);
  m(3, 3) = ch * ch;  // |e1 e2>
  m(0, 0) = sh * sh;  // |g1 g2>
  return DensityMatrix(HermitianMatrix(std::move(m)), BasisLabel::joint4());
}

/// Exact solver for the intrinsic-decoherence master equation
///   drho/dt = -i [H, rho] - (gamma/2) [H, [H, rho]]        (hbar = 1).
/// In the energy eigenbasis each element decouples:
///   rho~_kl(t) = rho~_kl(0) exp(-i w_kl t - (gamma/2) w_kl^2 t),
/// with w_kl = E_k - E_l, so propagation to any time is a pair of basis
/// transforms plus an element-wise filter. gamma = 0 reduces to ordinary
/// unitary evolution. Immutable after construction; evolve calls at distinct
/// times are independent.
class Propagator {
 public:
  Propagator(const HermitianMatrix& h, double gamma)
      : eig_(eig_hermitian(h)), gamma_(gamma) {
    if (gamma < 0.0) throw std::invalid_argument("Propagator: gamma must be >= 0");
  }

  Propagator(EigenSystem eig, double gamma) : eig_(std::move(eig)), gamma_(gamma) {
    if (gamma < 0.0) throw std::invalid_argument("Propagator: gamma must be >= 0");
  }

  const EigenSystem& eigensystem() const { return eig_; }
  double gamma() const { return gamma_; }

  /// Spectral spread max E - min E (eigenvalues are sorted ascending).
  double spectral_spread() const { return eig_.values.back() - eig_.values.front(); }

  /// Smallest nonzero |E_k - E_l|, or 0 when the spectrum is fully
  /// degenerate. Gaps below 1e-9 * spread count as zero.
  double min_nonzero_gap() const {
    const double thresh = 1e-9 * spectral_spread();
    double best = 0.0;
    for (std::size_t k = 0; k < eig_.values.size(); ++k)
      for (std::size_t l = k + 1; l < eig_.values.size(); ++l) {
        const double g = std::fabs(eig_.values[l] - eig_.values[k]);
        if (g > thresh && (best == 0.0 || g < best)) best = g;
      }
    return best;
  }

  /// Validation hook: flips the sign of the decay exponent so that
  /// coherences grow instead of damping. Exists solely so the invariant
  /// suite can demonstrate that a corrupted propagator is caught.
  void corrupt_decay_sign() { decay_sign_ = +1.0; }
  double decay_sign() const { return decay_sign_; }

 private:
  EigenSystem eig_;
  double gamma_;
  double decay_sign_ = -1.0;
};

inline DensityMatrix evolve(const Propagator& prop, const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be >= 0");
  const EigenSystem& es = prop.eigensystem();
  const std::size_t n = rho0.dim();
  if (es.vectors.dim() != n)
    throw std::invalid_argument("evolve: propagator and state dimensions differ");

  const ComplexMatrix& u = es.vectors;
  const ComplexMatrix rt = u.adjoint() * rho0.matrix() * u;
  ComplexMatrix ft(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) {
        ft(k, l) = rt(k, l);
        continue;
      }
      const double w = es.values[k] - es.values[l];
      const double damp = std::exp(prop.decay_sign() * 0.5 * prop.gamma() * w * w * t);
      const double ph = -w * t;
      ft(k, l) = rt(k, l) * (damp * cd{std::cos(ph), std::sin(ph)});
    }
  }
  return DensityMatrix(hermitize(u * ft * u.adjoint()), rho0.basis());
}

/// Right-hand side -i [H, rho] - (gamma/2) [H, [H, rho]] for the numeric
/// reference integrator. Valid for arbitrary (not necessarily Hermitian)
/// stage values.
inline ComplexMatrix master_equation_rhs(const ComplexMatrix& h, double gamma,
                                         const ComplexMatrix& r) {
  const ComplexMatrix c = h * r - r * h;
  ComplexMatrix out = cd{0.0, -1.0} * c;
  if (gamma != 0.0) out -= (0.5 * gamma) * (h * c - c * h);
  return out;
}

/// Classic fourth-order Runge-Kutta integration of the master equation, the
/// independent oracle for `evolve`. The final step is shortened to land
/// exactly on t. The raw integrator output is returned: it is neither
/// hermitized nor trace-renormalized, so any drift is visible to callers.
inline DensityMatrix evolve_rk4(const HermitianMatrix& h, double gamma, const DensityMatrix& rho0,
                                double t, double step) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_rk4: t must be >= 0");
  if (!(step > 0.0)) throw std::invalid_argument("evolve_rk4: step must be > 0");
  if (t / step > 1e7) throw std::runtime_error("evolve_rk4: step-count overflow (t/h > 1e7)");
  if (gamma < 0.0) throw std::invalid_argument("evolve_rk4: gamma must be >= 0");

  const ComplexMatrix& hm = h.matrix();
  ComplexMatrix r = rho0.matrix();
  double done = 0.0;
  while (done < t) {
    const double hstep = std::min(step, t - done);
    const ComplexMatrix k1 = master_equation_rhs(hm, gamma, r);
    const ComplexMatrix k2 = master_equation_rhs(hm, gamma, r + (0.5 * hstep) * k1);
    const ComplexMatrix k3 = master_equation_rhs(hm, gamma, r + (0.5 * hstep) * k2);
    const ComplexMatrix k4 = master_equation_rhs(hm, gamma, r + hstep * k3);
    ComplexMatrix incr = k1;
    incr += k4;
    incr += 2.0 * (k2 + k3);
    r += (hstep / 6.0) * incr;
    done += hstep;
  }
  return DensityMatrix(HermitianMatrix(std::move(r)), rho0.basis());
}

/// The t -> infinity limit under phase decoherence: in the energy eigenbasis
/// every element with a nonzero gap decays away, while populations and
/// coherences inside degenerate eigenspaces persist. Gaps are compared
/// against 1e-9 * spectral spread. Requires gamma > 0 (no limit exists for
/// unitary evolution).
inline DensityMatrix dephased_limit(const Propagator& prop, const DensityMatrix& rho0) {
  if (!(prop.gamma() > 0.0))
    throw std::invalid_argument("dephased_limit: gamma must be > 0, no limit exists otherwise");
  const EigenSystem& es = prop.eigensystem();
  const std::size_t n = rho0.dim();
  if (es.vectors.dim() != n)
    throw std::invalid_argument("dephased_limit: propagator and state dimensions differ");

  const ComplexMatrix& u = es.vectors;
  ComplexMatrix rt = u.adjoint() * rho0.matrix() * u;
  const double thresh = 1e-9 * prop.spectral_spread();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (std::fabs(es.values[k] - es.values[l]) > thresh) rt(k, l) = 0.0;
  return DensityMatrix(hermitize(u * rt * u.adjoint()), rho0.basis());
}

}  // namespace cpb
