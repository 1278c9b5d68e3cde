// Copyright 2026 The ttla authors
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

#ifndef TTLA_PROPAGATOR_HPP
#define TTLA_PROPAGATOR_HPP

#include "ttla/liouvillian.hpp"

namespace ttla {

/// Heisenberg-picture channel: either exp(L t) at finite t or the
/// quasi-stationary limit map.
struct ChannelMap {
  enum class Kind { finite_time, quasi_stationary };

  Superoperator superop;  // Heisenberg picture
  Kind kind = Kind::finite_time;
  double time = 0.0;  // meaningful for finite_time only

  static ChannelMap identity();

  /// Heisenberg action on an observable.
  Matrix4 apply_observable(const Matrix4& op) const;

  /// Schrodinger action (Hilbert-Schmidt adjoint) on a state matrix.
  Matrix4 apply_state_matrix(const Matrix4& rho) const;
};

/// exp(matrix16 * t) via scaling-and-squaring.
ChannelMap evolve(const Superoperator& gen, double t);

/// Deviations between the three routes to the limit map; filled by
/// quasi_stationary_map when requested.
struct QuasiStationaryDiagnostics {
  double dev_resolvent = 0.0;
  double dev_longtime = 0.0;
  bool longtime_checked = false;
};

/// Limit map after all decaying modes are gone: the spectral projector
/// onto the kernel of the generator along its range (singular values
/// below 1e-10 relative).  Cross-checked internally against the
/// Abel-type resolvent limit  lim_{s->0+} s (sI - L)^-1  evaluated on a
/// decreasing s-sequence with Richardson extrapolation, and against
/// exp(L t) at t = 1e4 (the latter only when the spectrum contains no
/// nonzero purely imaginary eigenvalues, i.e. when a long-time limit
/// exists).  Throws NumericError when the methods disagree beyond
/// 1e-8, reporting all results.
///
/// At |g| = 1 the kernel is 4-dimensional: the identity, the dark-state
/// projector, and the two conserved coherence operators between the
/// pair ground state and the dark state.  For |g| < 1 only the
/// identity survives and the map sends every state to |gg>.
ChannelMap quasi_stationary_map(const Superoperator& gen,
                                QuasiStationaryDiagnostics* diag = nullptr);

/// Schrodinger-picture application with output validation (trace and
/// Hermiticity at 1e-12 after renormalizing rounding, eigenvalue floor
/// -1e-9).  Throws NumericError when the output fails, which signals a
/// generator bug rather than bad input.
DensityMatrix apply_to_state(const ChannelMap& map, const DensityMatrix& rho);

/// Probability that the pair ends in the singlet state after fast
/// relaxation at g = 1, as a closed form of the initial single-atom
/// states:
///   A = (n1 + n2 - 2 Re(c1 conj(c2)) - 2 n1 n2) / 2.
/// Equals the singlet population of the quasi-stationary image of the
/// product state.
double singlet_probability(const TlaState& a, const TlaState& b);

}  // namespace ttla

#endif  // TTLA_PROPAGATOR_HPP
