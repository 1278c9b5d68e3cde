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

#ifndef TTLA_MEASUREMENT_HPP
#define TTLA_MEASUREMENT_HPP

#include <array>
#include <vector>

#include "ttla/propagator.hpp"

namespace ttla {

// Outcome indexing convention: axis index 0 = atom found excited,
// index 1 = atom found ground.  The coincidence-scheme ladder relocates
// the atom cyclically after detection (found ground -> placed excited
// and vice versa); it is not a projective measurement.

/// Cyclic two-outcome ladder on one atom: raise(k) = |k+1><k| with
/// outcome k = 0 meaning "found excited".  lower(k) = raise(k)^dag and
/// sum_k lower(k) raise(k) = identity (checked at 1e-14 on
/// construction).
struct LadderSet {
  std::array<Matrix2, 2> raise_op;
  std::array<Matrix2, 2> lower_op;
};

LadderSet tla_ladder();

/// Nonnegative outcome table over 2 (one atom, two times) or 4 (both
/// atoms, two times) binary indices.  Four-point axes are ordered
/// (atom 1 at t=0, atom 2 at t=0, atom 1 at t=tau, atom 2 at t=tau).
/// Entries below -1e-12 fail construction; small negatives are clamped
/// to zero and counted.  The sum must be 1 within 1e-10.
class JointDistribution {
 public:
  JointDistribution(int arity, std::vector<double> probs);

  int arity() const { return arity_; }
  const std::vector<double>& probs() const { return probs_; }
  int clamped_count() const { return clamped_; }

  double at2(int i1, int i2) const;
  double at4(int i1, int i2, int i3, int i4) const;

  /// Sum over all axes except `axis`.
  std::array<double, 2> marginal_axis(int axis) const;

  /// Initial-pair marginal (sum over the two t=tau axes); arity 4 only.
  std::array<double, 4> marginal_initial_pair() const;

  /// Final-pair marginal (sum over the two t=0 axes); arity 4 only.
  std::array<double, 4> marginal_final_pair() const;

 private:
  int arity_;
  std::vector<double> probs_;
  int clamped_ = 0;
};

/// Two-point distribution P(k1, k2): atom 1 measured at t = 0
/// (outcome axis 1), atom 2 at t = tau (axis 2), the channel acting on
/// the atom-2 level projector between the ladder sandwiches.
JointDistribution joint_two_point(const DensityMatrix& rho,
                                  const ChannelMap& map);

/// Four-point distribution: both atoms measured at t = 0 and again at
/// t = tau, with the t = tau projectors transported by the channel.
JointDistribution joint_four_point(const DensityMatrix& rho,
                                   const ChannelMap& map);

/// Closed-form tables for the quasi-stationary g = 1 channel as a
/// function of the initial excited populations only (coherences do not
/// enter).  Reference data for the pipeline above.
JointDistribution golden_joint(const TlaState& a, const TlaState& b,
                               int arity);

}  // namespace ttla

#endif  // TTLA_MEASUREMENT_HPP
