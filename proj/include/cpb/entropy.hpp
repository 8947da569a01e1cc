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

#include <array>
#include <cmath>
#include <stdexcept>

#include "cpb/density.hpp"
#include "cpb/matrix.hpp"

namespace cpb {

/// Per-time-point observables of a joint trajectory. Entropies are in bits;
/// populations are the diagonal occupation probabilities in the charge basis,
/// ordered (p_gg, p_ge, p_eg, p_ee).
struct CorrelationRecord {
  double t = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double mutual = 0.0;
  double purity = 0.0;
  double energy = 0.0;
  std::array<double, 4> populations{0.0, 0.0, 0.0, 0.0};
};

/// Quantum mutual entropy I = S(rho_A) + S(rho_B) - S(rho_AB) in bits, the
/// total (classical plus quantum) correlation between the qubits. Negative
/// round-off within 1e-10 of zero is clamped to zero.
inline double mutual_entropy(const DensityMatrix& rho) {
  const double s_ab = von_neumann_entropy(rho);
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  double mi = s_a + s_b - s_ab;
  if (mi < 0.0 && mi > -1e-10) mi = 0.0;
  return mi;
}

/// The closed-form eigenvalues of a joint state that is block-diagonal with
/// respect to {|e1e2>}, {|g1g2>} and the central {|g1e2>, |e1g2>} pair:
///   lambda_1 = <e1e2|rho|e1e2>,  lambda_2 = <g1g2|rho|g1g2>,
///   lambda_{3,4} = (a + b)/2 +- sqrt((a - b)^2 + 4 |c|^2) / 2
/// with a = <e1g2|rho|e1g2>, b = <g1e2|rho|g1e2>, c = <e1g2|rho|g1e2>.
/// The discriminant uses (a - b)^2, the standard 2x2 eigenvalue form; with
/// (a + b)^2 in its place lambda_4 would go negative for any |c| > 0.
///
/// The block structure is a precondition (checked to 1e-9); states produced
/// by generic evolution do not satisfy it, and callers should use the general
/// eigensolver path instead.
inline std::array<double, 4> closed_form_joint_eigenvalues(const DensityMatrix& rho) {
  if (rho.basis().kind != BasisLabel::Kind::joint4)
    throw std::invalid_argument("closed_form_joint_eigenvalues: expected joint4 basis, got " +
                                rho.basis().name());
  double off = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool central = (i == 1 || i == 2) && (j == 1 || j == 2);
      if (i != j && !central) off = std::max(off, std::abs(rho(i, j)));
    }
  if (off > 1e-9)
    throw std::invalid_argument(
        "closed_form_joint_eigenvalues: state is not block-diagonal over {b3},{b0},{b1,b2} "
        "(max stray element " +
        std::to_string(off) + "); use the general eigensolver path");

  const double lam1 = rho(3, 3).real();
  const double lam2 = rho(0, 0).real();
  const double a = rho(2, 2).real();  // <e1g2| rho |e1g2>
  const double b = rho(1, 1).real();  // <g1e2| rho |g1e2>
  const double c2 = std::norm(rho(2, 1));
  const double disc = std::sqrt((a - b) * (a - b) + 4.0 * c2);
  return {lam1, lam2, 0.5 * (a + b + disc), 0.5 * (a + b - disc)};
}

/// Reduced entropies of both qubits, computed from the full 2x2 spectra of
/// the reduced states (not just their diagonals, which is only equivalent
/// when the single-qubit coherences vanish). The coherent_* flags report
/// reduced off-diagonals above 1e-9, i.e. exactly the situations where a
/// diagonal-only evaluation would differ.
struct ReducedEntropies {
  double s_a = 0.0;
  double s_b = 0.0;
  bool coherent_a = false;
  bool coherent_b = false;
};

inline ReducedEntropies reduced_entropies(const DensityMatrix& rho) {
  const DensityMatrix ra = partial_trace(rho, Subsystem::A);
  const DensityMatrix rb = partial_trace(rho, Subsystem::B);
  ReducedEntropies out;
  out.s_a = von_neumann_entropy(ra);
  out.s_b = von_neumann_entropy(rb);
  out.coherent_a = std::abs(ra(0, 1)) > 1e-9;
  out.coherent_b = std::abs(rb(0, 1)) > 1e-9;
  return out;
}

/// Bundle of all per-time-point observables for one state of a trajectory.
inline CorrelationRecord observe(const HermitianMatrix& h, const DensityMatrix& rho, double t) {
  if (h.dim() != rho.dim()) throw std::invalid_argument("observe: dimension mismatch");
  if (rho.basis().kind != BasisLabel::Kind::joint4)
    throw std::invalid_argument("observe: expected joint4 basis, got " + rho.basis().name());

  CorrelationRecord rec;
  rec.t = t;
  const ReducedEntropies red = reduced_entropies(rho);
  rec.s_a = red.s_a;
  rec.s_b = red.s_b;
  rec.s_ab = von_neumann_entropy(rho);
  rec.mutual = rec.s_a + rec.s_b - rec.s_ab;
  if (rec.mutual < 0.0 && rec.mutual > -1e-10) rec.mutual = 0.0;
  rec.purity = purity(rho);
  rec.energy = (h.matrix() * rho.matrix()).trace().real();
  for (std::size_t i = 0; i < 4; ++i) rec.populations[i] = rho(i, i).real();
  return rec;
}

}  // namespace cpb
