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

#include "ttla/operator_algebra.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace ttla {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

Matrix2 sigma_plus() {
  Matrix2 m = Matrix2::Zero();
  m(1, 0) = 1.0;
  return m;
}

Matrix2 sigma_minus() {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = 1.0;
  return m;
}

Matrix2 ground_projector() {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = 1.0;
  return m;
}

Matrix2 excited_projector() {
  Matrix2 m = Matrix2::Zero();
  m(1, 1) = 1.0;
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Matrix4 embed(const Matrix2& op, int atom) {
  if (atom == 1) return kron(op, Matrix2::Identity());
  if (atom == 2) return kron(Matrix2::Identity(), op);
  throw std::invalid_argument("embed: atom must be 1 or 2");
}

Matrix4 atom_swap() {
  Matrix4 p = Matrix4::Zero();
  p(0, 0) = 1.0;
  p(1, 2) = 1.0;
  p(2, 1) = 1.0;
  p(3, 3) = 1.0;
  return p;
}

Vector4 ground_pair_state() {
  Vector4 v = Vector4::Zero();
  v(0) = 1.0;
  return v;
}

Vector4 singlet_state() {
  Vector4 v = Vector4::Zero();
  v(1) = 1.0 / kSqrt2;
  v(2) = -1.0 / kSqrt2;
  return v;
}

Complex hs_inner(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                 const Eigen::Ref<const Eigen::MatrixXcd>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  return (a.adjoint() * b).trace();
}

std::array<Matrix2, 4> single_atom_basis() {
  const Complex i(0.0, 1.0);
  Matrix2 p12 = Matrix2::Zero();  // |1><2|
  p12(0, 1) = 1.0;
  Matrix2 p21 = p12.adjoint();
  std::array<Matrix2, 4> s;
  s[0] = Matrix2::Identity() / kSqrt2;
  s[1] = (excited_projector() - ground_projector()) / kSqrt2;
  s[2] = (p12 + p21) / kSqrt2;
  s[3] = i * (p12 - p21) / kSqrt2;
  return s;
}

OperatorBasis::OperatorBasis() {
  const auto s = single_atom_basis();
  constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int k = 0; k < 4; ++k) elements_[k] = kron(s[k], s[k]);
  for (int k = 0; k < 6; ++k) {
    const Matrix4 ij = kron(s[pairs[k][0]], s[pairs[k][1]]);
    const Matrix4 ji = kron(s[pairs[k][1]], s[pairs[k][0]]);
    elements_[4 + k] = (ij + ji) / kSqrt2;
    elements_[10 + k] = (ij - ji) / kSqrt2;
  }
}

const OperatorBasis& OperatorBasis::canonical() {
  static const OperatorBasis instance;
  return instance;
}

Vector16 OperatorBasis::expand(const Matrix4& op) const {
  Vector16 c;
  for (int k = 0; k < kSize; ++k)
    c(k) = (elements_[k].adjoint() * op).trace();
  return c;
}

Matrix4 OperatorBasis::reconstruct(const Vector16& coeffs) const {
  Matrix4 out = Matrix4::Zero();
  for (int k = 0; k < kSize; ++k) out += coeffs(k) * elements_[k];
  return out;
}

TlaState::TlaState(double n_, Complex c_) : n(n_), c(c_) {
  if (!(n >= 0.0 && n <= 1.0))
    throw std::invalid_argument("TlaState: population outside [0, 1]");
  if (std::norm(c) > n * (1.0 - n) + 1e-12)
    throw std::invalid_argument("TlaState: coherence violates positivity");
}

Matrix2 TlaState::density() const {
  Matrix2 m;
  m(0, 0) = 1.0 - n;
  m(0, 1) = c;
  m(1, 0) = std::conj(c);
  m(1, 1) = n;
  return m;
}

DensityMatrix DensityMatrix::from_matrix(const Matrix4& m, double herm_tol,
                                         double trace_tol, double eig_floor) {
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > herm_tol)
    throw NumericError("density matrix not Hermitian: deviation " +
                       std::to_string(herm_dev));
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > trace_tol)
    throw NumericError("density matrix trace differs from 1 by " +
                       std::to_string(std::abs(tr - 1.0)));
  DensityMatrix rho(m);
  const double lo = rho.min_eigenvalue();
  if (lo < eig_floor)
    throw NumericError("density matrix has eigenvalue " + std::to_string(lo));
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(0.5 * (m_ + m_.adjoint()));
  return es.eigenvalues().minCoeff();
}

DensityMatrix product_state(const TlaState& a, const TlaState& b) {
  return DensityMatrix::from_matrix(kron(a.density(), b.density()));
}

}  // namespace ttla
