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

#include "ttla/propagator.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace ttla {

ChannelMap ChannelMap::identity() {
  ChannelMap m;
  m.superop.matrix16 = Matrix16::Identity();
  m.superop.picture = Picture::heisenberg;
  m.kind = Kind::finite_time;
  m.time = 0.0;
  return m;
}

Matrix4 ChannelMap::apply_observable(const Matrix4& op) const {
  return superop.apply(op);
}

Matrix4 ChannelMap::apply_state_matrix(const Matrix4& rho) const {
  const auto& basis = OperatorBasis::canonical();
  return basis.reconstruct(superop.matrix16.adjoint() * basis.expand(rho));
}

ChannelMap evolve(const Superoperator& gen, double t) {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("evolve: t must be finite and >= 0");
  ChannelMap map;
  map.superop.picture = Picture::heisenberg;
  map.superop.matrix16 = (gen.matrix16 * t).exp();
  map.kind = ChannelMap::Kind::finite_time;
  map.time = t;
  return map;
}

namespace {

// Projector onto ker(M) along range(M).  Valid because the zero
// eigenvalue of a relaxation generator is semisimple (the semigroup is
// bounded), so kernel and range are complementary.
Matrix16 kernel_projector(const Matrix16& m) {
  Eigen::JacobiSVD<Matrix16> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int kdim = 0;
  for (int k = 0; k < 16; ++k)
    if (sv(k) < 1e-10 * sv(0)) ++kdim;
  if (kdim == 0)
    throw NumericError("quasi_stationary_map: generator has trivial kernel");
  Matrix16 b;
  b.leftCols(kdim) = svd.matrixV().rightCols(kdim);
  b.rightCols(16 - kdim) = svd.matrixU().leftCols(16 - kdim);
  Matrix16 d = Matrix16::Zero();
  d.topLeftCorner(kdim, kdim).setIdentity();
  return b * d * b.inverse();
}

// lim_{s->0+} s (sI - L)^-1 on a geometric s-sequence, accelerated by
// a Neville/Richardson table in s.
Matrix16 resolvent_limit(const Matrix16& m) {
  const std::vector<double> s = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  std::vector<Matrix16> tab(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    tab[k] = s[k] * (s[k] * Matrix16::Identity() - m).inverse();
  }
  for (std::size_t order = 1; order < s.size(); ++order) {
    for (std::size_t k = 0; k + order < s.size(); ++k) {
      const double r = s[k] / s[k + order];
      tab[k] = (r * tab[k + 1] - tab[k]) / (r - 1.0);
    }
  }
  return tab[0];
}

bool has_oscillatory_modes(const Superoperator& gen) {
  for (const Complex& ev : spectrum(gen)) {
    if (std::abs(ev.real()) < 1e-10 && std::abs(ev.imag()) > 1e-10)
      return true;
  }
  return false;
}

}  // namespace

ChannelMap quasi_stationary_map(const Superoperator& gen,
                                QuasiStationaryDiagnostics* diag) {
  if (gen.picture != Picture::heisenberg)
    throw std::invalid_argument(
        "quasi_stationary_map: expects a Heisenberg-picture generator");
  const Matrix16 proj = kernel_projector(gen.matrix16);
  const Matrix16 resv = resolvent_limit(gen.matrix16);
  const double dev_resolvent = (proj - resv).cwiseAbs().maxCoeff();
  double dev_exp = 0.0;
  bool exp_checked = false;
  if (!has_oscillatory_modes(gen)) {
    const Matrix16 longtime = (gen.matrix16 * 1e4).exp();
    dev_exp = (proj - longtime).cwiseAbs().maxCoeff();
    exp_checked = true;
  }
  if (diag) {
    diag->dev_resolvent = dev_resolvent;
    diag->dev_longtime = dev_exp;
    diag->longtime_checked = exp_checked;
  }
  if (dev_resolvent > 1e-8 || dev_exp > 1e-8) {
    std::ostringstream msg;
    msg << "quasi_stationary_map: method disagreement: projector vs resolvent "
        << dev_resolvent;
    if (exp_checked) msg << ", projector vs long-time exponential " << dev_exp;
    throw NumericError(msg.str());
  }
  ChannelMap map;
  map.superop.matrix16 = proj;
  map.superop.picture = Picture::heisenberg;
  map.kind = ChannelMap::Kind::quasi_stationary;
  return map;
}

DensityMatrix apply_to_state(const ChannelMap& map, const DensityMatrix& rho) {
  const Matrix4 out = map.apply_state_matrix(rho.matrix());
  return DensityMatrix::from_matrix(out, 1e-9, 1e-12, -1e-9);
}

double singlet_probability(const TlaState& a, const TlaState& b) {
  const double val =
      0.5 * (a.n + b.n - 2.0 * (a.c * std::conj(b.c)).real() - 2.0 * a.n * b.n);
  return val;
}

}  // namespace ttla
