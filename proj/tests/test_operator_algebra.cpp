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

#include "ttla/operator_algebra.hpp"

using namespace ttla;

namespace {

Matrix4 random_matrix4(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

TEST_SUITE("operator_algebra") {

TEST_CASE("single-atom basis is the normalized identity/population/"
          "coherence set") {
  const auto s = single_atom_basis();
  CHECK((s[0] - Matrix2::Identity() / kSqrt2).cwiseAbs().maxCoeff() < 1e-15);
  // population element acts as +1/sqrt(2) on the excited level
  Eigen::Vector2cd excited;
  excited << 0.0, 1.0;
  const Eigen::Vector2cd out = s[1] * excited;
  CHECK(std::abs(out(1) - 1.0 / kSqrt2) < 1e-15);
  CHECK(std::abs(out(0)) < 1e-15);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex want = i == j ? 1.0 : 0.0;
      CHECK(std::abs(hs_inner(s[i], s[j]) - want) < 1e-14);
    }
}

TEST_CASE("hs_inner basics") {
  CHECK(std::abs(hs_inner(Matrix2::Identity() / kSqrt2,
                          Matrix2::Identity() / kSqrt2) -
                 1.0) < 1e-15);
  CHECK(std::abs(hs_inner(sigma_minus(), sigma_plus())) < 1e-15);
  std::mt19937 rng(7);
  const Matrix4 a = random_matrix4(rng), b = random_matrix4(rng);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-13);
  CHECK_THROWS_AS(hs_inner(Matrix2::Identity(), Matrix4::Identity()),
                  std::invalid_argument);
}

TEST_CASE("pair basis: orthonormal, permutation-graded") {
  const auto& basis = OperatorBasis::canonical();
  CHECK((basis.element(0) - Matrix4::Identity() / 2.0).cwiseAbs().maxCoeff() <
        1e-15);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const Complex want = i == j ? 1.0 : 0.0;
      CHECK(std::abs(hs_inner(basis.element(i), basis.element(j)) - want) <
            1e-12);
    }
  const Matrix4 p = atom_swap();
  for (int k = 0; k < 16; ++k) {
    const double sign = k < OperatorBasis::kSymmetricCount ? 1.0 : -1.0;
    CHECK((p * basis.element(k) * p - sign * basis.element(k))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
}

TEST_CASE("expand/reconstruct is the coordinate bijection") {
  const auto& basis = OperatorBasis::canonical();
  for (int k = 0; k < 16; ++k) {
    const Vector16 c = basis.expand(basis.element(k));
    for (int i = 0; i < 16; ++i)
      CHECK(std::abs(c(i) - (i == k ? 1.0 : 0.0)) < 1e-13);
  }
  const Vector16 id_coords = basis.expand(Matrix4::Identity());
  CHECK(std::abs(id_coords(0) - 2.0) < 1e-14);
  CHECK(id_coords.tail<15>().cwiseAbs().maxCoeff() < 1e-14);

  // bijection on the 16 canonical matrix units
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Matrix4 unit = Matrix4::Zero();
      unit(i, j) = 1.0;
      CHECK((basis.reconstruct(basis.expand(unit)) - unit)
                .cwiseAbs()
                .maxCoeff() < 1e-13);
    }

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4 x = random_matrix4(rng);
    const Matrix4 back = basis.reconstruct(basis.expand(x));
    CHECK((back - x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("product states") {
  const DensityMatrix gg = product_state(TlaState(0.0), TlaState(0.0));
  CHECK(std::abs(gg.matrix()(0, 0) - 1.0) < 1e-15);
  CHECK(gg.matrix().cwiseAbs().sum() - 1.0 < 1e-15);

  // atom 1 excited, atom 2 ground lands on |eg>
  const DensityMatrix eg = product_state(TlaState(1.0), TlaState(0.0));
  CHECK(std::abs(eg.matrix()(2, 2) - 1.0) < 1e-15);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double n1 = u(rng), n2 = u(rng);
    const double b1 = std::sqrt(n1 * (1 - n1)) * u(rng);
    const double b2 = std::sqrt(n2 * (1 - n2)) * u(rng);
    const DensityMatrix rho =
        product_state(TlaState(n1, std::polar(b1, 6.28 * u(rng))),
                      TlaState(n2, std::polar(b2, 6.28 * u(rng))));
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-14);
    CHECK(rho.min_eigenvalue() > -1e-12);
  }
}

TEST_CASE("state invariants rejected") {
  CHECK_THROWS_AS(TlaState(1.5), std::invalid_argument);
  CHECK_THROWS_AS(TlaState(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(TlaState(0.5, Complex(0.6, 0.0)), std::invalid_argument);

  Matrix4 bad = Matrix4::Identity() / 4.0;
  bad(0, 1) = Complex(0.2, 0.0);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), NumericError);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(Matrix4::Identity()),
                  NumericError);  // trace 4
}

}  // TEST_SUITE
