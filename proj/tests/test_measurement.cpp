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

#include <doctest.h>

#include <random>

#include "ttla/measurement.hpp"

using namespace ttla;

namespace {

TlaState random_state(std::mt19937& rng, bool coh) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double n = u(rng);
  if (!coh) return TlaState(n);
  const double mag = 0.999 * std::sqrt(n * (1 - n)) * std::sqrt(u(rng));
  return TlaState(n, std::polar(mag, 6.283185307179586 * u(rng)));
}

ChannelMap limit_map(double g) {
  return quasi_stationary_map(collective_decay_generator(DecayRates(g)));
}

}  // namespace

TEST_SUITE("measurement") {

TEST_CASE("ladder: completeness, level projectors, cyclic relocation") {
  const LadderSet l = tla_ladder();
  CHECK((l.lower_op[0] * l.raise_op[0] - excited_projector())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  CHECK((l.lower_op[1] * l.raise_op[1] - ground_projector())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  // detecting the ground level relocates the amplitude to the excited one
  const Matrix2 relocated =
      l.raise_op[1] * ground_projector() * l.lower_op[1];
  CHECK((relocated - excited_projector()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("two-point table for both atoms ground") {
  const JointDistribution j = joint_two_point(
      product_state(TlaState(0.0), TlaState(0.0)), limit_map(1.0));
  CHECK(std::abs(j.at2(0, 0)) < 1e-12);
  CHECK(std::abs(j.at2(0, 1)) < 1e-12);
  CHECK(std::abs(j.at2(1, 0) - 0.25) < 1e-12);
  CHECK(std::abs(j.at2(1, 1) - 0.75) < 1e-12);
}

TEST_CASE("two-point table for atom 1 excited, atom 2 ground") {
  const JointDistribution j = joint_two_point(
      product_state(TlaState(1.0), TlaState(0.0)), limit_map(1.0));
  CHECK(std::abs(j.at2(0, 0)) < 1e-12);
  CHECK(std::abs(j.at2(0, 1) - 1.0) < 1e-12);
  CHECK(std::abs(j.at2(1, 0)) < 1e-12);
  CHECK(std::abs(j.at2(1, 1)) < 1e-12);
}

TEST_CASE("identity channel factorizes the two-point table") {
  std::mt19937 rng(29);
  const ChannelMap id = ChannelMap::identity();
  for (int k = 0; k < 20; ++k) {
    const TlaState s1 = random_state(rng, true), s2 = random_state(rng, true);
    const JointDistribution j = joint_two_point(product_state(s1, s2), id);
    const double w1[2] = {s1.n, 1 - s1.n}, w2[2] = {s2.n, 1 - s2.n};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK(std::abs(j.at2(a, b) - w1[a] * w2[b]) < 1e-13);
  }
}

TEST_CASE("identity channel four-point: relocated re-reading") {
  std::mt19937 rng(31);
  const ChannelMap id = ChannelMap::identity();
  const TlaState s1 = random_state(rng, false), s2 = random_state(rng, false);
  const JointDistribution j = joint_four_point(product_state(s1, s2), id);
  const double w1[2] = {s1.n, 1 - s1.n}, w2[2] = {s2.n, 1 - s2.n};
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4) {
          const double want =
              (i3 == 1 - i1 && i4 == 1 - i2) ? w1[i1] * w2[i2] : 0.0;
          CHECK(std::abs(j.at4(i1, i2, i3, i4) - want) < 1e-13);
        }
}

TEST_CASE("pipeline reproduces the closed-form tables, coherences drop out") {
  const ChannelMap map = limit_map(1.0);
  std::mt19937 rng(37);
  for (int k = 0; k < 100; ++k) {
    const TlaState s1 = random_state(rng, true), s2 = random_state(rng, true);
    const DensityMatrix rho = product_state(s1, s2);
    for (int arity : {2, 4}) {
      const JointDistribution pipe =
          arity == 2 ? joint_two_point(rho, map) : joint_four_point(rho, map);
      const JointDistribution gold = golden_joint(s1, s2, arity);
      for (std::size_t i = 0; i < pipe.probs().size(); ++i)
        CHECK(std::abs(pipe.probs()[i] - gold.probs()[i]) < 1e-9);
    }
  }
}

TEST_CASE("four-point structural zeros: both atoms never end excited") {
  const ChannelMap map = limit_map(1.0);
  std::mt19937 rng(41);
  for (int k = 0; k < 10; ++k) {
    const JointDistribution j = joint_four_point(
        product_state(random_state(rng, false), random_state(rng, false)),
        map);
    for (int i1 = 0; i1 < 2; ++i1)
      for (int i2 = 0; i2 < 2; ++i2)
        CHECK(std::abs(j.at4(i1, i2, 0, 0)) < 1e-12);
  }
}

TEST_CASE("golden tables normalize symbolically") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const TlaState s1(u(rng)), s2(u(rng));
    for (int arity : {2, 4}) {
      const JointDistribution j = golden_joint(s1, s2, arity);
      double sum = 0.0;
      for (double p : j.probs()) sum += p;
      CHECK(std::abs(sum - 1.0) < 1e-14);
    }
  }
  const JointDistribution j = golden_joint(TlaState(0.0), TlaState(0.0), 2);
  CHECK(j.at2(1, 0) == 0.25);
  CHECK(j.at2(1, 1) == 0.75);
}

TEST_CASE("marginals") {
  std::vector<double> uniform(4, 0.25);
  const JointDistribution u2(2, uniform);
  CHECK(u2.marginal_axis(0)[0] == doctest::Approx(0.5));
  CHECK(u2.marginal_axis(1)[1] == doctest::Approx(0.5));

  const TlaState s1(0.37), s2(0.62);
  const JointDistribution j = golden_joint(s1, s2, 2);
  const auto rows = j.marginal_axis(0);
  CHECK(std::abs(rows[0] - s1.n) < 1e-14);
  CHECK(std::abs(rows[1] - (1 - s1.n)) < 1e-14);

  const JointDistribution j4 = golden_joint(s1, s2, 4);
  const auto init = j4.marginal_initial_pair();
  CHECK(std::abs(init[0] - s1.n * s2.n) < 1e-14);
  CHECK(std::abs(init[1] - s1.n * (1 - s2.n)) < 1e-14);
  CHECK(std::abs(init[2] - (1 - s1.n) * s2.n) < 1e-14);
  CHECK(std::abs(init[3] - (1 - s1.n) * (1 - s2.n)) < 1e-14);
  // marginal of a marginal equals the direct single-axis sum
  const auto axis0 = j4.marginal_axis(0);
  CHECK(std::abs(axis0[0] - (init[0] + init[1])) < 1e-14);
}

TEST_CASE("antiparallel case gives identical tables") {
  const ChannelMap plus = limit_map(1.0), minus = limit_map(-1.0);
  std::mt19937 rng(47);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho =
        product_state(random_state(rng, false), random_state(rng, false));
    for (int arity : {2, 4}) {
      const JointDistribution a =
          arity == 2 ? joint_two_point(rho, plus) : joint_four_point(rho, plus);
      const JointDistribution b = arity == 2 ? joint_two_point(rho, minus)
                                             : joint_four_point(rho, minus);
      for (std::size_t i = 0; i < a.probs().size(); ++i)
        CHECK(std::abs(a.probs()[i] - b.probs()[i]) < 1e-9);
    }
  }
}

TEST_CASE("distribution invariants enforced") {
  CHECK_THROWS_AS(JointDistribution(2, {0.5, 0.5, 0.25, -0.25}), NumericError);
  CHECK_THROWS_AS(JointDistribution(2, {0.5, 0.5, 0.5, 0.5}), NumericError);
  CHECK_THROWS_AS(JointDistribution(3, {0.5, 0.5}), std::invalid_argument);
  // tiny negatives are clamped and counted
  const JointDistribution j(2, {0.5, 0.5, -1e-13, 1e-13});
  CHECK(j.clamped_count() == 1);
  CHECK(j.probs()[2] == 0.0);
}

}  // TEST_SUITE
