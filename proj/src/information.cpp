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

#include "ttla/information.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace ttla {

namespace {
constexpr double kLog2 = 0.6931471805599453;

double xlogx_bits(double w) { return w > 0.0 ? w * std::log(w) / kLog2 : 0.0; }
}  // namespace

double entropy_bits(std::span<const double> w) {
  double sum = 0.0, h = 0.0;
  for (double p : w) {
    if (p < -1e-12)
      throw std::invalid_argument("entropy_bits: negative probability");
    if (p > 0.0) h -= xlogx_bits(p);
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("entropy_bits: distribution not normalized");
  return h;
}

InfoResult mutual_information(const JointDistribution& j) {
  InfoResult r;
  if (j.arity() == 2) {
    const auto m1 = j.marginal_axis(0);
    const auto m2 = j.marginal_axis(1);
    r.h_first = entropy_bits(m1);
    r.h_second = entropy_bits(m2);
  } else {
    const auto m1 = j.marginal_initial_pair();
    const auto m2 = j.marginal_final_pair();
    r.h_first = entropy_bits(m1);
    r.h_second = entropy_bits(m2);
  }
  r.h_joint = entropy_bits(j.probs());
  r.value_bits = r.h_first + r.h_second - r.h_joint;
  return r;
}

double info_at(InfoMode mode, const ChannelMap& map, double n1, double n2) {
  const DensityMatrix rho = product_state(TlaState(n1), TlaState(n2));
  const JointDistribution j = mode == InfoMode::two_point
                                  ? joint_two_point(rho, map)
                                  : joint_four_point(rho, map);
  return mutual_information(j).value_bits;
}

namespace {

ChannelMap standard_channel() {
  return quasi_stationary_map(collective_decay_generator(DecayRates(1.0)));
}

// Golden-section maximization over [lo, hi]; also compares against the
// interval endpoints so boundary maxima are kept exact.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi, double xtol) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  double fx = f(x);
  for (double cand : {lo, hi}) {
    const double fcand = f(cand);
    if (fcand > fx) {
      x = cand;
      fx = fcand;
    }
  }
  return {x, fx};
}

}  // namespace

std::vector<SurfacePoint> info_surface(InfoMode mode, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("info_surface: grid_n >= 2");
  const ChannelMap map = standard_channel();
  std::vector<SurfacePoint> out;
  out.reserve(std::size_t(grid_n) * grid_n);
  for (int i = 0; i < grid_n; ++i) {
    const double n1 = double(i) / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double n2 = double(j) / (grid_n - 1);
      out.push_back({n1, n2, info_at(mode, map, n1, n2)});
    }
  }
  return out;
}

OptimumReport optimize(InfoMode mode) {
  const ChannelMap map = standard_channel();
  auto f = [&](double n1, double n2) { return info_at(mode, map, n1, n2); };

  constexpr int kGrid = 101;
  const double step = 1.0 / (kGrid - 1);
  std::vector<SurfacePoint> grid;
  grid.reserve(kGrid * kGrid);
  double gmax = 0.0;
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const double v = f(i * step, j * step);
      grid.push_back({i * step, j * step, v});
      gmax = std::max(gmax, v);
    }

  // refine every near-maximal grid point, deduplicated by position
  std::vector<SurfacePoint> seeds;
  for (const auto& p : grid) {
    if (p.info_bits < gmax - 1e-4) continue;
    const bool dup = std::any_of(seeds.begin(), seeds.end(), [&](const auto& s) {
      return std::abs(s.n1 - p.n1) < 2.5 * step &&
             std::abs(s.n2 - p.n2) < 2.5 * step;
    });
    if (!dup) seeds.push_back(p);
  }

  std::vector<SurfacePoint> refined;
  for (auto seed : seeds) {
    double n1 = seed.n1, n2 = seed.n2;
    double window = 2.0 * step;
    for (int round = 0; round < 4; ++round) {
      auto r1 = golden_max([&](double x) { return f(x, n2); },
                           std::max(0.0, n1 - window),
                           std::min(1.0, n1 + window), 1e-7);
      n1 = r1.first;
      auto r2 = golden_max([&](double y) { return f(n1, y); },
                           std::max(0.0, n2 - window),
                           std::min(1.0, n2 + window), 1e-7);
      n2 = r2.first;
      window *= 0.35;
    }
    if (n1 < 1e-6) n1 = 0.0;
    if (n1 > 1.0 - 1e-6) n1 = 1.0;
    if (n2 < 1e-6) n2 = 0.0;
    if (n2 > 1.0 - 1e-6) n2 = 1.0;
    refined.push_back({n1, n2, f(n1, n2)});
  }

  // merge refinements that converged to the same point; keep the set
  // ordered for reproducible output (the four-point maximum sits on a
  // degenerate ridge, so many distinct argmax points are legitimate)
  std::sort(refined.begin(), refined.end(),
            [](const SurfacePoint& a, const SurfacePoint& b) {
              return a.n1 != b.n1 ? a.n1 < b.n1 : a.n2 < b.n2;
            });
  std::vector<SurfacePoint> merged;
  for (const auto& p : refined) {
    const bool dup =
        std::any_of(merged.begin(), merged.end(), [&](const SurfacePoint& q) {
          return std::abs(q.n1 - p.n1) < 5e-3 && std::abs(q.n2 - p.n2) < 5e-3;
        });
    if (!dup) merged.push_back(p);
  }

  OptimumReport rep;
  for (const auto& p : merged)
    if (p.info_bits > rep.value_bits) {
      rep.value_bits = p.info_bits;
      rep.n1 = p.n1;
      rep.n2 = p.n2;
    }
  for (const auto& p : merged)
    if (p.info_bits > rep.value_bits - 1e-9) rep.argmax_points.push_back(p);
  return rep;
}

double closed_form_max() {
  const double s = std::sqrt(37.0);
  const double t1 = 1.5 - 3.0 * s / 16.0;
  const double t2 = 2.0 - s / 4.0;
  const double t3 = 0.5 + s / 16.0;
  return t1 * std::log2(t1) - t2 * std::log2(t2) - t3 * std::log2(t3);
}

}  // namespace ttla
