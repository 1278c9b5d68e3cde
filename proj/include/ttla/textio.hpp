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

#ifndef TTLA_TEXTIO_HPP
#define TTLA_TEXTIO_HPP

#include <string>
#include <vector>

#include "ttla/information.hpp"

namespace ttla::textio {

/// Fixed-format float printing: %.{sig}g with "-0" normalized to "0".
/// Identical inputs always yield identical bytes.
std::string fmt(double v, int sig = 9);

/// Complex number as a JSON-style two-element array [re, im].
std::string fmt_complex(Complex v, int sig = 9);

/// "row,col,re,im" CSV lines for a complex matrix, row-major, with
/// header.
std::string matrix_csv(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                       int sig = 9);

/// Nested-array JSON of [re, im] pairs.
std::string matrix_json(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                        int sig = 9);

/// "n1,n2,info_bits" CSV, row-major, with header.
std::string surface_csv(const std::vector<SurfacePoint>& pts, int sig = 9);

/// Standalone SVG heatmap of a surface sampled on a uniform grid
/// (grid_n x grid_n, row-major in n1 then n2), linear color map with
/// min/max annotated.
std::string surface_svg(const std::vector<SurfacePoint>& pts, int grid_n,
                        const std::string& title);

void write_file(const std::string& path, const std::string& content);

}  // namespace ttla::textio

#endif  // TTLA_TEXTIO_HPP
