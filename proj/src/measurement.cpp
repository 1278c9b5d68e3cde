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

#include "ttla/measurement.hpp"

#include <cmath>
#include <string>

namespace ttla {

LadderSet tla_ladder() {
  LadderSet l;
  // found excited (index 0): relocate to ground; found ground: relocate
  // to excited.  lower(k) raise(k) is the projector onto the found level.
  l.raise_op[0] = sigma_minus();
  l.raise_op[1] = sigma_plus();
  for (int k = 0; k < 2; ++k) l.lower_op[k] = l.raise_op[k].adjoint();
  const Matrix2 completeness =
      l.lower_op[0] * l.raise_op[0] + l.lower_op[1] * l.raise_op[1];
  if ((completeness - Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-14)
    throw NumericError("tla_ladder: completeness violated");
  return l;
}

JointDistribution::JointDistribution(int arity, std::vector<double> probs)
    : arity_(arity), probs_(std::move(probs)) {
  if (arity_ != 2 && arity_ != 4)
    throw std::invalid_argument("JointDistribution: arity must be 2 or 4");
  if (probs_.size() != (std::size_t(1) << arity_))
    throw std::invalid_argument("JointDistribution: wrong table size");
  double sum = 0.0;
  for (double& p : probs_) {
    if (p < -1e-12)
      throw NumericError("JointDistribution: negative probability " +
                         std::to_string(p));
    if (p < 0.0) {
      p = 0.0;
      ++clamped_;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw NumericError("JointDistribution: normalization off by " +
                       std::to_string(std::abs(sum - 1.0)));
}

double JointDistribution::at2(int i1, int i2) const {
  return probs_.at(std::size_t(i1) * 2 + i2);
}

double JointDistribution::at4(int i1, int i2, int i3, int i4) const {
  return probs_.at(((std::size_t(i1) * 2 + i2) * 2 + i3) * 2 + i4);
}

std::array<double, 2> JointDistribution::marginal_axis(int axis) const {
  if (axis < 0 || axis >= arity_)
    throw std::invalid_argument("marginal_axis: axis out of range");
  std::array<double, 2> out{0.0, 0.0};
  const int shift = arity_ - 1 - axis;
  for (std::size_t idx = 0; idx < probs_.size(); ++idx)
    out[(idx >> shift) & 1] += probs_[idx];
  return out;
}

std::array<double, 4> JointDistribution::marginal_initial_pair() const {
  if (arity_ != 4)
    throw std::invalid_argument("marginal_initial_pair: arity 4 required");
  std::array<double, 4> out{};
  for (std::size_t idx = 0; idx < probs_.size(); ++idx)
    out[idx >> 2] += probs_[idx];
  return out;
}

std::array<double, 4> JointDistribution::marginal_final_pair() const {
  if (arity_ != 4)
    throw std::invalid_argument("marginal_final_pair: arity 4 required");
  std::array<double, 4> out{};
  for (std::size_t idx = 0; idx < probs_.size(); ++idx)
    out[idx & 3] += probs_[idx];
  return out;
}

JointDistribution joint_two_point(const DensityMatrix& rho,
                                  const ChannelMap& map) {
  const LadderSet l = tla_ladder();
  Matrix4 transported[2];
  for (int i2 = 0; i2 < 2; ++i2)
    transported[i2] =
        map.apply_observable(embed(l.lower_op[i2] * l.raise_op[i2], 2));
  std::vector<double> p(4);
  for (int i1 = 0; i1 < 2; ++i1) {
    const Matrix4 lo = embed(l.lower_op[i1], 1);
    const Matrix4 ra = embed(l.raise_op[i1], 1);
    for (int i2 = 0; i2 < 2; ++i2) {
      const Complex val =
          (rho.matrix() * lo * transported[i2] * ra).trace();
      p[std::size_t(i1) * 2 + i2] = val.real();
    }
  }
  return JointDistribution(2, std::move(p));
}

JointDistribution joint_four_point(const DensityMatrix& rho,
                                   const ChannelMap& map) {
  const LadderSet l = tla_ladder();
  Matrix4 transported[2][2];
  for (int i3 = 0; i3 < 2; ++i3) {
    const Matrix4 lo3 = embed(l.lower_op[i3], 1);
    const Matrix4 ra3 = embed(l.raise_op[i3], 1);
    for (int i4 = 0; i4 < 2; ++i4) {
      const Matrix4 lo4 = embed(l.lower_op[i4], 2);
      const Matrix4 ra4 = embed(l.raise_op[i4], 2);
      transported[i3][i4] = map.apply_observable(lo3 * lo4 * ra4 * ra3);
    }
  }
  std::vector<double> p(16);
  for (int i1 = 0; i1 < 2; ++i1) {
    const Matrix4 lo1 = embed(l.lower_op[i1], 1);
    const Matrix4 ra1 = embed(l.raise_op[i1], 1);
    for (int i2 = 0; i2 < 2; ++i2) {
      const Matrix4 lo2 = embed(l.lower_op[i2], 2);
      const Matrix4 ra2 = embed(l.raise_op[i2], 2);
      for (int i3 = 0; i3 < 2; ++i3) {
        for (int i4 = 0; i4 < 2; ++i4) {
          const Complex val = (rho.matrix() * lo1 * lo2 *
                               transported[i3][i4] * ra2 * ra1)
                                  .trace();
          p[((std::size_t(i1) * 2 + i2) * 2 + i3) * 2 + i4] = val.real();
        }
      }
    }
  }
  return JointDistribution(4, std::move(p));
}

JointDistribution golden_joint(const TlaState& a, const TlaState& b,
                               int arity) {
  const double n1 = a.n, n2 = b.n;
  if (arity == 2) {
    std::vector<double> p(4);
    p[0 * 2 + 0] = n1 * n2 / 4.0;
    p[0 * 2 + 1] = n1 * (4.0 - n2) / 4.0;
    p[1 * 2 + 0] = (1.0 - n1) * (1.0 - n2) / 4.0;
    p[1 * 2 + 1] = (1.0 - n1) * (3.0 + n2) / 4.0;
    return JointDistribution(2, std::move(p));
  }
  if (arity == 4) {
    std::vector<double> p(16, 0.0);
    auto set = [&p](int i1, int i2, int i3, int i4, double v) {
      p[((std::size_t(i1) * 2 + i2) * 2 + i3) * 2 + i4] = v;
    };
    set(0, 0, 1, 1, n1 * n2);
    set(0, 1, 1, 1, n1 * (1.0 - n2) / 2.0);
    set(0, 1, 1, 0, n1 * (1.0 - n2) / 4.0);
    set(0, 1, 0, 1, n1 * (1.0 - n2) / 4.0);
    set(1, 0, 1, 1, (1.0 - n1) * n2 / 2.0);
    set(1, 0, 1, 0, (1.0 - n1) * n2 / 4.0);
    set(1, 0, 0, 1, (1.0 - n1) * n2 / 4.0);
    set(1, 1, 1, 1, (1.0 - n1) * (1.0 - n2));
    return JointDistribution(4, std::move(p));
  }
  throw std::invalid_argument("golden_joint: arity must be 2 or 4");
}

}  // namespace ttla
