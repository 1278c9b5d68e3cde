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

#include "ttla/liouvillian.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>

namespace ttla {

namespace {
constexpr double kPi = 3.141592653589793;
constexpr double kSqrt2 = 1.4142135623730951;
}  // namespace

Geometry::Geometry(double phi_, Orientation o) : phi(phi_), orientation(o) {
  if (!(phi >= 0.0) || !std::isfinite(phi))
    throw std::invalid_argument("Geometry: phi must be finite and >= 0");
}

namespace {
void require_perpendicular(const Geometry& geom) {
  if (std::abs(geom.theta - 1.5707963267948966) > 1e-12)
    throw std::invalid_argument(
        "only dipoles perpendicular to the interatomic axis are supported");
}
}  // namespace

DecayRates::DecayRates(double g_, double gamma_) : gamma(gamma_), g(g_) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("DecayRates: gamma must be positive");
  if (std::abs(g) > 1.0)
    throw std::invalid_argument(
        "DecayRates: |g| > 1 breaks positivity of the rate matrix");
}

double exchange_factor(const Geometry& geom) {
  require_perpendicular(geom);
  const double phi = geom.phi;
  double g;
  if (phi < 0.05) {
    // closed form cancels catastrophically as phi -> 0; the series is
    // at machine accuracy below the crossover
    const double p2 = phi * phi;
    g = 1.0 - p2 / 5.0 + 3.0 * p2 * p2 / 280.0 - p2 * p2 * p2 / 3780.0;
  } else {
    g = 1.5 * (phi * std::cos(phi) - std::sin(phi) + phi * phi * std::sin(phi)) /
        (phi * phi * phi);
  }
  return geom.orientation == Orientation::antiparallel ? -g : g;
}

namespace {

// Sphere integral of (1 - (n.x)^2) exp(-i phi n.z) with the separation
// along z and the dipole along x.  u = cos(theta) panels use fixed
// 16-point Gauss-Legendre; the azimuthal integral uses the trapezoid
// rule, which converges spectrally for periodic integrands.
Complex sphere_integral(double phi, int u_panels, int azimuthal_points) {
  using gauss = boost::math::quadrature::gauss<double, 16>;
  const Complex i(0.0, 1.0);
  Complex total = 0.0;
  const double dphi = 2.0 * kPi / azimuthal_points;
  for (int p = 0; p < u_panels; ++p) {
    const double a = -1.0 + 2.0 * double(p) / u_panels;
    const double b = a + 2.0 / u_panels;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t q = 0; q < gauss::abscissa().size(); ++q) {
      // abscissa() stores the non-negative half of the symmetric rule
      for (int sign : {-1, 1}) {
        const double node = gauss::abscissa()[q];
        if (sign < 0 && node == 0.0) continue;
        const double u = mid + sign * node * half;
        const double w = gauss::weights()[q] * half;
        const double sin2 = 1.0 - u * u;
        Complex az = 0.0;
        for (int m = 0; m < azimuthal_points; ++m) {
          const double c = std::cos(m * dphi);
          az += (1.0 - sin2 * c * c);
        }
        total += w * az * dphi * std::exp(-i * phi * u);
      }
    }
  }
  return total;
}

}  // namespace

double exchange_factor_integral(const Geometry& geom, double target_err) {
  require_perpendicular(geom);
  const double phi = geom.phi;
  const double denom = 8.0 * kPi / 3.0;  // same integral at zero separation
  double prev = 0.0, delta = 0.0;
  bool have_prev = false;
  // refine both directions together until two successive levels agree
  for (int level = 0; level < 9; ++level) {
    const int panels = 2 << level;
    const int az = 8 << level;
    const Complex val = sphere_integral(phi, panels, az);
    if (std::abs(val.imag()) > 1e-8 * std::max(1.0, std::abs(val.real())))
      throw NumericError("exchange_factor_integral: spurious imaginary part");
    const double cur = val.real() / denom;
    if (have_prev) {
      delta = std::abs(cur - prev);
      if (delta < target_err)
        return geom.orientation == Orientation::antiparallel ? -cur : cur;
    }
    prev = cur;
    have_prev = true;
  }
  throw NumericError(
      "exchange_factor_integral: refinement stalled at error " +
      std::to_string(delta) + " (target " + std::to_string(target_err) + ")");
}

Matrix4 Superoperator::apply(const Matrix4& op) const {
  const auto& basis = OperatorBasis::canonical();
  return basis.reconstruct(matrix16 * basis.expand(op));
}

Superoperator Superoperator::adjoint() const {
  Superoperator out;
  out.matrix16 = matrix16.adjoint();
  out.picture = picture == Picture::heisenberg ? Picture::schrodinger
                                               : Picture::heisenberg;
  return out;
}

Superoperator collective_decay_generator(const DecayRates& rates) {
  const Matrix4 sp[2] = {embed(sigma_plus(), 1), embed(sigma_plus(), 2)};
  const Matrix4 sm[2] = {embed(sigma_minus(), 1), embed(sigma_minus(), 2)};
  const double rate[2][2] = {{rates.gamma, rates.g * rates.gamma},
                             {rates.g * rates.gamma, rates.gamma}};

  const auto& basis = OperatorBasis::canonical();
  Superoperator gen;
  gen.picture = Picture::heisenberg;
  for (int j = 0; j < OperatorBasis::kSize; ++j) {
    const Matrix4& x = basis.element(j);
    Matrix4 image = Matrix4::Zero();
    for (int k = 0; k < 2; ++k) {
      for (int m = 0; m < 2; ++m) {
        const Matrix4 a = sp[k] * sm[m];
        image += rate[k][m] *
                 (sp[k] * x * sm[m] - 0.5 * (a * x + x * a));
      }
    }
    gen.matrix16.col(j) = basis.expand(image);
  }
  return gen;
}

Superoperator add_coherent_exchange(const Superoperator& s, double g_c) {
  if (s.picture != Picture::heisenberg)
    throw std::invalid_argument(
        "add_coherent_exchange: expects a Heisenberg-picture generator");
  const Matrix4 h =
      g_c * (embed(sigma_plus(), 1) * embed(sigma_minus(), 2) +
             embed(sigma_minus(), 1) * embed(sigma_plus(), 2));
  const Complex i(0.0, 1.0);
  const auto& basis = OperatorBasis::canonical();
  Superoperator out = s;
  for (int j = 0; j < OperatorBasis::kSize; ++j) {
    const Matrix4& x = basis.element(j);
    out.matrix16.col(j) += basis.expand(i * (h * x - x * h));
  }
  return out;
}

std::array<Complex, 16> spectrum(const Superoperator& s) {
  Eigen::ComplexEigenSolver<Matrix16> es(s.matrix16, false);
  if (es.info() != Eigen::Success)
    throw NumericError("spectrum: eigensolver failed");
  std::array<Complex, 16> out;
  for (int k = 0; k < 16; ++k) out[k] = es.eigenvalues()(k);
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

GoldenBlocks golden_blocks(double g) {
  GoldenBlocks b;
  const double r2 = kSqrt2;
  b.ss1 << 0, 0, 0, 0, -r2,
           0, -2, g, g, 0,
           0, g, -1, 0, -g / r2,
           0, g, 0, -1, -g / r2,
           0, -r2, g / r2, g / r2, -1;
  b.ss2 << -0.5, 0, -1 - g / 2, 0, 0,
           0, -0.5, 0, -1 - g / 2, 0,
           g / 2, 0, -1.5 - g, 0, 0,
           0, g / 2, 0, -1.5 - g, 0,
           0, 0, 0, 0, -1;
  b.aa << -1, 0, 0, 0, 0, 0,
          0, -0.5, 0, -1 + g / 2, 0, 0,
          0, 0, -0.5, 0, -1 + g / 2, 0,
          0, -g / 2, 0, -1.5 + g, 0, 0,
          0, 0, -g / 2, 0, -1.5 + g, 0,
          0, 0, 0, 0, 0, -1;
  return b;
}

Matrix16 GoldenBlocks::assemble16() const {
  Matrix16 m = Matrix16::Zero();
  m.block<5, 5>(0, 0) = ss1.cast<Complex>();
  m.block<5, 5>(5, 5) = ss2.cast<Complex>();
  m.block<6, 6>(10, 10) = aa.cast<Complex>();
  return m;
}

}  // namespace ttla
