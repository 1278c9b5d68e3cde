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

#ifndef TTLA_LIOUVILLIAN_HPP
#define TTLA_LIOUVILLIAN_HPP

#include <array>

#include "ttla/operator_algebra.hpp"

namespace ttla {

enum class Orientation { parallel, antiparallel };

/// Pair geometry reduced to the dimensionless phase delay phi
/// (transition frequency times separation over c) and the relative
/// dipole orientation.  Only dipoles perpendicular to the interatomic
/// axis (theta = pi/2) are supported.
struct Geometry {
  double phi = 0.0;
  Orientation orientation = Orientation::parallel;
  double theta = 1.5707963267948966;

  Geometry() = default;
  Geometry(double phi_, Orientation o = Orientation::parallel);
};

/// gamma is the single-atom decay rate (the time unit; default 1) and
/// g the photon-exchange efficiency.  |g| <= 1 is required for the
/// 2x2 rate matrix [[gamma, g gamma], [g gamma, gamma]] to be
/// positive-semidefinite.
struct DecayRates {
  double gamma = 1.0;
  double g = 0.0;

  DecayRates() = default;
  DecayRates(double g_, double gamma_ = 1.0);
};

/// Closed-form exchange efficiency
///   g(phi) = (3/2)(phi cos phi - sin phi + phi^2 sin phi)/phi^3,
/// evaluated by series below phi = 1e-3; negated for antiparallel
/// dipoles.
double exchange_factor(const Geometry& geom);

/// Quadrature evaluation of the same quantity as the ratio of the
/// transverse-dipole sphere integral with the phase factor to its
/// value at zero separation.  Product Gauss-Legendre x periodic
/// trapezoid rule, refined by doubling until two successive levels
/// differ by less than target_err.  Independent check of
/// exchange_factor; throws NumericError when refinement stalls.
double exchange_factor_integral(const Geometry& geom,
                                double target_err = 1e-9);

enum class Picture { heisenberg, schrodinger };

/// Linear map on the two-atom operator space, stored as coordinates
/// over OperatorBasis::canonical().  Column j holds the expansion of
/// the image of basis element j.
struct Superoperator {
  Matrix16 matrix16 = Matrix16::Zero();
  Picture picture = Picture::heisenberg;

  /// Action on a 4x4 operator via expand / matrix16 / reconstruct.
  Matrix4 apply(const Matrix4& op) const;

  /// Hilbert-Schmidt adjoint; toggles the picture tag.
  Superoperator adjoint() const;
};

/// Heisenberg-picture generator of collective radiative decay: each
/// atom decays at rate gamma and the cross terms exchange photons at
/// rate g*gamma.  Annihilates the identity, preserves Hermiticity and
/// is block-diagonal over the symmetric/antisymmetric basis split.
Superoperator collective_decay_generator(const DecayRates& rates);

/// Adds the coherent exchange term +i[H_C, .] with
/// H_C = g_c (sp_1 sm_2 + sm_1 sp_2), g_c in units of gamma.
Superoperator add_coherent_exchange(const Superoperator& s, double g_c);

/// Eigenvalues of matrix16 sorted by descending real part.
std::array<Complex, 16> spectrum(const Superoperator& s);

/// Tabulated reference blocks for the generator at unit gamma: the two
/// 5x5 symmetric blocks and the 6x6 antisymmetric block, with g
/// substituted.  Golden data for tests; assemble16 places them on the
/// canonical basis ordering (which reproduces the constructed
/// generator entrywise).
struct GoldenBlocks {
  Eigen::Matrix<double, 5, 5> ss1;
  Eigen::Matrix<double, 5, 5> ss2;
  Eigen::Matrix<double, 6, 6> aa;

  Matrix16 assemble16() const;
};

GoldenBlocks golden_blocks(double g);

}  // namespace ttla

#endif  // TTLA_LIOUVILLIAN_HPP
