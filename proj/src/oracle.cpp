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

#include "ttla/oracle.hpp"

#include <vector>

#include <boost/numeric/odeint.hpp>

namespace ttla::oracle {

namespace {

// Local operator definitions, kept separate from the main assembly path
// on purpose.
Matrix2 local_sp() {
  Matrix2 m = Matrix2::Zero();
  m(1, 0) = 1.0;  // |excited><ground|
  return m;
}

Matrix2 local_sm() { return local_sp().adjoint(); }

Matrix4 local_kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

struct MasterEquation {
  Matrix4 sp[2], sm[2], spm[2][2];
  double rate[2][2];

  explicit MasterEquation(double g) {
    const Matrix2 id = Matrix2::Identity();
    sp[0] = local_kron(local_sp(), id);
    sp[1] = local_kron(id, local_sp());
    sm[0] = local_kron(local_sm(), id);
    sm[1] = local_kron(id, local_sm());
    for (int k = 0; k < 2; ++k)
      for (int m = 0; m < 2; ++m) {
        spm[k][m] = sp[k] * sm[m];
        rate[k][m] = (k == m) ? 1.0 : g;
      }
  }

  Matrix4 rhs(const Matrix4& rho) const {
    Matrix4 d = Matrix4::Zero();
    for (int k = 0; k < 2; ++k)
      for (int m = 0; m < 2; ++m)
        d += rate[k][m] * (sm[m] * rho * sp[k] -
                           0.5 * (spm[k][m] * rho + rho * spm[k][m]));
    return d;
  }
};

using State = std::vector<Complex>;

}  // namespace

Matrix4 ode_evolve(const Matrix4& rho, double g, double t, double rtol) {
  if (std::abs(g) > 1.0)
    throw std::invalid_argument("ode_evolve: |g| must be <= 1");
  if (t == 0.0) return rho;

  const MasterEquation eq(g);
  auto system = [&eq](const State& x, State& dxdt, double /*t*/) {
    Eigen::Map<const Matrix4> r(x.data());
    const Matrix4 d = eq.rhs(r);
    dxdt.assign(d.data(), d.data() + 16);
  };

  State x(rho.data(), rho.data() + 16);
  using stepper = boost::numeric::odeint::runge_kutta_fehlberg78<State>;
  try {
    boost::numeric::odeint::integrate_adaptive(
        boost::numeric::odeint::make_controlled<stepper>(1e-14, rtol), system,
        x, 0.0, t, std::min(t, 0.01));
  } catch (const std::exception& e) {
    throw NumericError(std::string("ode_evolve: integration failed: ") +
                       e.what());
  }
  return Eigen::Map<const Matrix4>(x.data());
}

std::vector<double> enumerate_joint(const Matrix4& rho, const ChannelMap& map,
                                    int arity) {
  // outcome index 0 = found excited, relocated to ground; 1 = found
  // ground, relocated to excited
  const Matrix2 raise_op[2] = {local_sm(), local_sp()};
  const Matrix2 proj[2] = {local_sp() * local_sm(), local_sm() * local_sp()};
  const Matrix2 id = Matrix2::Identity();

  std::vector<double> out;
  if (arity == 2) {
    out.resize(4);
    for (int i1 = 0; i1 < 2; ++i1) {
      const Matrix4 up = local_kron(raise_op[i1], id);
      const Matrix4 conditional = up * rho * up.adjoint();
      const Matrix4 evolved = map.apply_state_matrix(conditional);
      for (int i2 = 0; i2 < 2; ++i2)
        out[std::size_t(i1) * 2 + i2] =
            (evolved * local_kron(id, proj[i2])).trace().real();
    }
    return out;
  }
  if (arity == 4) {
    out.resize(16);
    for (int i1 = 0; i1 < 2; ++i1)
      for (int i2 = 0; i2 < 2; ++i2) {
        const Matrix4 up = local_kron(raise_op[i1], raise_op[i2]);
        const Matrix4 conditional = up * rho * up.adjoint();
        const Matrix4 evolved = map.apply_state_matrix(conditional);
        for (int i3 = 0; i3 < 2; ++i3)
          for (int i4 = 0; i4 < 2; ++i4)
            out[((std::size_t(i1) * 2 + i2) * 2 + i3) * 2 + i4] =
                (evolved * local_kron(proj[i3], proj[i4])).trace().real();
      }
    return out;
  }
  throw std::invalid_argument("enumerate_joint: arity must be 2 or 4");
}

}  // namespace ttla::oracle
