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

#include "ttla/textio.hpp"

using namespace ttla;
using namespace ttla::textio;

TEST_SUITE("textio") {

TEST_CASE("float formatting is fixed and normalized") {
  CHECK(fmt(0.1) == "0.1");
  CHECK(fmt(-0.0) == "0");
  CHECK(fmt(1.0 / 3.0) == "0.333333333");
  CHECK(fmt(1.0 / 3.0, 4) == "0.3333");
  CHECK(fmt(1.23456789e-7) == "1.23456789e-07");
  CHECK(fmt(0.25) == fmt(0.25));
}

TEST_CASE("complex and matrix emitters") {
  CHECK(fmt_complex(Complex(1.5, -0.25)) == "[1.5,-0.25]");
  Eigen::MatrixXcd m(1, 2);
  m(0, 0) = Complex(1, 0);
  m(0, 1) = Complex(0, -2);
  CHECK(matrix_csv(m) == "row,col,re,im\n0,0,1,0\n0,1,0,-2\n");
  CHECK(matrix_json(m) == "[[[1,0],[0,-2]]]");
}

TEST_CASE("surface emitters") {
  std::vector<SurfacePoint> pts = {
      {0.0, 0.0, 0.0}, {0.0, 1.0, 0.1}, {1.0, 0.0, 0.2}, {1.0, 1.0, 0.05}};
  const std::string csv = surface_csv(pts);
  CHECK(csv.rfind("n1,n2,info_bits\n", 0) == 0);
  CHECK(csv.find("1,0,0.2\n") != std::string::npos);

  const std::string svg = surface_svg(pts, 2, "test");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("max 0.2") != std::string::npos);
  CHECK(svg.find("min 0") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK_THROWS_AS(surface_svg(pts, 3, "bad"), std::invalid_argument);
}

}  // TEST_SUITE
