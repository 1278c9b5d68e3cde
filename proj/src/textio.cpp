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

#include "ttla/textio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ttla::textio {

std::string fmt(double v, int sig) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", sig, v);
  return buf;
}

std::string fmt_complex(Complex v, int sig) {
  return "[" + fmt(v.real(), sig) + "," + fmt(v.imag(), sig) + "]";
}

std::string matrix_csv(const Eigen::Ref<const Eigen::MatrixXcd>& m, int sig) {
  std::ostringstream out;
  out << "row,col,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << i << ',' << j << ',' << fmt(m(i, j).real(), sig) << ','
          << fmt(m(i, j).imag(), sig) << '\n';
  return out.str();
}

std::string matrix_json(const Eigen::Ref<const Eigen::MatrixXcd>& m, int sig) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out << ",";
    out << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ",";
      out << fmt_complex(m(i, j), sig);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::string surface_csv(const std::vector<SurfacePoint>& pts, int sig) {
  std::ostringstream out;
  out << "n1,n2,info_bits\n";
  for (const auto& p : pts)
    out << fmt(p.n1, sig) << ',' << fmt(p.n2, sig) << ','
        << fmt(p.info_bits, sig) << '\n';
  return out.str();
}

namespace {

// dark blue -> yellow, linear
void color_of(double t, int rgb[3]) {
  const double r0 = 20, g0 = 30, b0 = 90;
  const double r1 = 250, g1 = 220, b1 = 40;
  rgb[0] = int(std::lround(r0 + t * (r1 - r0)));
  rgb[1] = int(std::lround(g0 + t * (g1 - g0)));
  rgb[2] = int(std::lround(b0 + t * (b1 - b0)));
}

}  // namespace

std::string surface_svg(const std::vector<SurfacePoint>& pts, int grid_n,
                        const std::string& title) {
  if (grid_n < 2 || pts.size() != std::size_t(grid_n) * grid_n)
    throw std::invalid_argument("surface_svg: grid size mismatch");
  double lo = pts[0].info_bits, hi = pts[0].info_bits;
  for (const auto& p : pts) {
    lo = std::min(lo, p.info_bits);
    hi = std::max(hi, p.info_bits);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  const int plot = 400, margin = 50, legend = 90;
  const double cell = double(plot) / grid_n;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
    << plot + margin * 2 + legend << "\" height=\"" << plot + margin * 2
    << "\">\n";
  s << "<text x=\"" << margin << "\" y=\"" << margin - 14
    << "\" font-family=\"sans-serif\" font-size=\"14\">" << title
    << "</text>\n";
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const auto& p = pts[std::size_t(i) * grid_n + j];
      int rgb[3];
      color_of((p.info_bits - lo) / span, rgb);
      // n1 along x, n2 along y, origin bottom-left
      const double x = margin + i * cell;
      const double y = margin + plot - (j + 1) * cell;
      s << "<rect x=\"" << fmt(x, 6) << "\" y=\"" << fmt(y, 6) << "\" width=\""
        << fmt(cell + 0.5, 6) << "\" height=\"" << fmt(cell + 0.5, 6)
        << "\" fill=\"rgb(" << rgb[0] << ',' << rgb[1] << ',' << rgb[2]
        << ")\"/>\n";
    }
  }
  // axes labels
  s << "<text x=\"" << margin + plot / 2 << "\" y=\"" << margin + plot + 30
    << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
       "n1</text>\n";
  s << "<text x=\"" << margin - 30 << "\" y=\"" << margin + plot / 2
    << "\" font-family=\"sans-serif\" font-size=\"12\">n2</text>\n";
  // legend bar
  const int lx = margin + plot + 30;
  for (int k = 0; k < 100; ++k) {
    int rgb[3];
    color_of(1.0 - k / 99.0, rgb);
    s << "<rect x=\"" << lx << "\" y=\"" << fmt(margin + k * plot / 100.0, 6)
      << "\" width=\"18\" height=\"" << fmt(plot / 100.0 + 0.5, 6)
      << "\" fill=\"rgb(" << rgb[0] << ',' << rgb[1] << ',' << rgb[2]
      << ")\"/>\n";
  }
  s << "<text x=\"" << lx + 22 << "\" y=\"" << margin + 10
    << "\" font-family=\"sans-serif\" font-size=\"11\">max " << fmt(hi, 6)
    << "</text>\n";
  s << "<text x=\"" << lx + 22 << "\" y=\"" << margin + plot
    << "\" font-family=\"sans-serif\" font-size=\"11\">min " << fmt(lo, 6)
    << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace ttla::textio
