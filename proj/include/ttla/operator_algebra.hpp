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

#ifndef TTLA_OPERATOR_ALGEBRA_HPP
#define TTLA_OPERATOR_ALGEBRA_HPP

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace ttla {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;

/// Thrown when a computation breaches a stated numerical tolerance
/// (as opposed to a precondition violation, which throws
/// std::invalid_argument).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single-atom level convention: |1> = ground = index 0, |2> = excited
// = index 1.  Pair Hilbert space ordering |gg>, |ge>, |eg>, |ee> with
// atom 1 as the left Kronecker factor.

Matrix2 sigma_plus();   // |2><1|, raising
Matrix2 sigma_minus();  // |1><2|, lowering
Matrix2 ground_projector();
Matrix2 excited_projector();

/// Kronecker product with atom 1 as the left factor.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Embeds a single-atom operator into the pair space.  atom is 1 or 2.
Matrix4 embed(const Matrix2& op, int atom);

/// 4x4 permutation matrix exchanging the two atoms.
Matrix4 atom_swap();

/// Pair ground state |gg>.
Vector4 ground_pair_state();

/// Singlet (|ge> - |eg>)/sqrt(2); stationary under collective decay at
/// g = 1.
Vector4 singlet_state();

/// Hilbert-Schmidt inner product Tr(a^dag b), conjugate-linear in the
/// first argument.  Both arguments must have equal dimensions.
Complex hs_inner(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                 const Eigen::Ref<const Eigen::MatrixXcd>& b);

/// Orthonormal single-atom operator basis: I/sqrt(2), (P22-P11)/sqrt(2),
/// (P12+P21)/sqrt(2), i(P12-P21)/sqrt(2), with P_ij = |i><j|.
std::array<Matrix2, 4> single_atom_basis();

/// Orthonormal 16-element two-atom operator basis.
///
/// Ordering: elements 0..3 are s_i (x) s_i; elements 4..9 are the
/// symmetrized (s_i (x) s_j + s_j (x) s_i)/sqrt(2) and elements 10..15
/// the antisymmetrized differences, both over the index pairs
/// (12, 13, 14, 23, 24, 34).  The first ten commute with the atom swap,
/// the last six anticommute.
class OperatorBasis {
 public:
  static constexpr int kSize = 16;
  static constexpr int kSymmetricCount = 10;

  OperatorBasis();

  /// Process-wide immutable instance; every superoperator coordinate
  /// representation in this library refers to it.
  static const OperatorBasis& canonical();

  const Matrix4& element(int k) const { return elements_.at(k); }
  const std::array<Matrix4, kSize>& elements() const { return elements_; }

  /// Coordinates of op in this basis.
  Vector16 expand(const Matrix4& op) const;

  /// Inverse of expand.
  Matrix4 reconstruct(const Vector16& coeffs) const;

 private:
  std::array<Matrix4, kSize> elements_;
};

/// Single two-level-atom state (n, c) with n the excited population and
/// c the |1><2| matrix element.  The 2x2 density matrix is
/// [[1-n, c], [conj(c), n]].
struct TlaState {
  double n = 0.0;
  Complex c = 0.0;

  TlaState() = default;
  /// Throws std::invalid_argument unless 0 <= n <= 1 and
  /// |c|^2 <= n(1-n) + 1e-12.
  TlaState(double n_, Complex c_ = 0.0);

  Matrix2 density() const;
};

/// Validated two-atom density matrix: Hermitian and unit trace within
/// 1e-12, eigenvalues >= -1e-10 (or the caller-supplied floor).
class DensityMatrix {
 public:
  /// Throws NumericError when m fails the invariants.
  static DensityMatrix from_matrix(const Matrix4& m,
                                   double herm_tol = 1e-12,
                                   double trace_tol = 1e-12,
                                   double eig_floor = -1e-10);

  const Matrix4& matrix() const { return m_; }
  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// rho_a (x) rho_b, atom 1 as the left factor.
DensityMatrix product_state(const TlaState& a, const TlaState& b);

}  // namespace ttla

#endif  // TTLA_OPERATOR_ALGEBRA_HPP
