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

#ifndef TTLA_INFORMATION_HPP
#define TTLA_INFORMATION_HPP

#include <span>
#include <vector>

#include "ttla/measurement.hpp"

namespace ttla {

/// Base-2 Shannon entropy with 0 log 0 = 0.  Entries must be >= 0 and
/// sum to 1 within 1e-10.
double entropy_bits(std::span<const double> w);

struct InfoResult {
  double value_bits = 0.0;
  double h_first = 0.0;   // H of the first marginal (t=0 side)
  double h_second = 0.0;  // H of the second marginal (t=tau side)
  double h_joint = 0.0;
};

/// Mutual information between the t=0 and t=tau outcomes:
/// arity 2 uses the two axis marginals, arity 4 the initial-pair and
/// final-pair marginals.
InfoResult mutual_information(const JointDistribution& j);

enum class InfoMode { two_point, four_point };

struct SurfacePoint {
  double n1 = 0.0;
  double n2 = 0.0;
  double info_bits = 0.0;
};

/// Information of the quasi-stationary g=1 pipeline over a uniform
/// grid_n x grid_n population grid (zero coherences), row-major in n1
/// then n2.
std::vector<SurfacePoint> info_surface(InfoMode mode, int grid_n);

struct OptimumReport {
  double n1 = 0.0;
  double n2 = 0.0;
  double value_bits = 0.0;
  /// All grid-detected maxima refined to 1e-6; equal-value symmetry
  /// partners (and points on a degenerate ridge) are all listed.
  std::vector<SurfacePoint> argmax_points;
};

/// Deterministic maximization of the information surface: 101x101
/// coarse scan, then coordinate-wise golden-section refinement.
OptimumReport optimize(InfoMode mode);

/// Tabulated closed-form reference value of the two-point maximum,
///   (3/2 - 3 s/16) log2(3/2 - 3 s/16) - (2 - s/4) log2(2 - s/4)
///   - (1/2 + s/16) log2(1/2 + s/16),   s = sqrt(37),
/// which equals the surface value at n1 = -1 + sqrt(37)/4, n2 = 0.
double closed_form_max();

/// Surface evaluation helper shared by info_surface and optimize: the
/// information at a single population pair through the quasi-stationary
/// g=1 channel.  The map argument lets callers reuse one channel.
double info_at(InfoMode mode, const ChannelMap& map, double n1, double n2);

}  // namespace ttla

#endif  // TTLA_INFORMATION_HPP
