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

#ifndef TTLA_ORACLE_HPP
#define TTLA_ORACLE_HPP

#include <vector>

#include "ttla/propagator.hpp"

// Brute-force reference implementations used by the test and
// verification suites.  These deliberately avoid the 16x16 coordinate
// machinery: the master equation is integrated directly on raw 4x4
// state matrices and the measurement chains are enumerated term by
// term, so agreement with the main path checks two independent routes.

namespace ttla::oracle {

/// Adaptive integration (controlled RKF78, relative tolerance rtol) of
/// the state-picture master equation assembled from sigma^{+/-}
/// products, for exchange efficiency g and unit gamma.
Matrix4 ode_evolve(const Matrix4& rho, double g, double t,
                   double rtol = 1e-10);

/// Conditional-state enumeration of the coincidence measurement:
/// apply the t=0 ladder sandwich to the state, push the conditional
/// state through the channel in the state picture, and read the final
/// projectors.  Returns the 2^arity outcome table in the layout of
/// JointDistribution.
std::vector<double> enumerate_joint(const Matrix4& rho, const ChannelMap& map,
                                    int arity);

}  // namespace ttla::oracle

#endif  // TTLA_ORACLE_HPP
