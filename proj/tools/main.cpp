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

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ttla/information.hpp"
#include "ttla/oracle.hpp"
#include "ttla/textio.hpp"
#include "ttla/verify.hpp"

namespace {

using namespace ttla;
using textio::fmt;

enum class Format { text, csv, json };

struct Output {
  std::string path;  // empty -> stdout
  void emit(const std::string& content) const {
    if (path.empty())
      std::cout << content;
    else
      textio::write_file(path, content);
  }
};

Complex parse_complex_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("expected RE,IM, got '" + s + "'");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

InfoMode parse_mode(const std::string& m) {
  if (m == "two") return InfoMode::two_point;
  if (m == "four") return InfoMode::four_point;
  throw CLI::ValidationError("mode must be 'two' or 'four'");
}

std::string joint_table(const JointDistribution& j, Format f, int sig) {
  std::ostringstream out;
  const char* level[2] = {"excited", "ground"};
  if (j.arity() == 2) {
    if (f == Format::json) {
      out << "{\"axes\":[\"atom1_t0\",\"atom2_tau\"],"
          << "\"levels\":[\"excited\",\"ground\"],\"p\":[";
      for (int i1 = 0; i1 < 2; ++i1) {
        if (i1) out << ",";
        out << "[" << fmt(j.at2(i1, 0), sig) << "," << fmt(j.at2(i1, 1), sig)
            << "]";
      }
      out << "]}\n";
    } else if (f == Format::csv) {
      out << "atom1_t0,atom2_tau,p\n";
      for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
          out << level[i1] << ',' << level[i2] << ','
              << fmt(j.at2(i1, i2), sig) << '\n';
    } else {
      out << "rows: atom 1 at t=0 (excited, ground); "
             "cols: atom 2 at t=tau (excited, ground)\n";
      for (int i1 = 0; i1 < 2; ++i1)
        out << fmt(j.at2(i1, 0), sig) << ' ' << fmt(j.at2(i1, 1), sig)
            << '\n';
      out << "mutual information: " << fmt(mutual_information(j).value_bits, sig)
          << " bit\n";
    }
    return out.str();
  }
  if (f == Format::json) {
    out << "{\"axes\":[\"atom1_t0\",\"atom2_t0\",\"atom1_tau\",\"atom2_tau\"],"
        << "\"levels\":[\"excited\",\"ground\"],\"p\":[";
    for (std::size_t i = 0; i < j.probs().size(); ++i) {
      if (i) out << ",";
      out << fmt(j.probs()[i], sig);
    }
    out << "]}\n";
    return out.str();
  }
  if (f == Format::csv) {
    out << "atom1_t0,atom2_t0,atom1_tau,atom2_tau,p\n";
    for (int i1 = 0; i1 < 2; ++i1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int i3 = 0; i3 < 2; ++i3)
          for (int i4 = 0; i4 < 2; ++i4)
            out << level[i1] << ',' << level[i2] << ',' << level[i3] << ','
                << level[i4] << ',' << fmt(j.at4(i1, i2, i3, i4), sig)
                << '\n';
    return out.str();
  }
  out << "rows: initial pair (k1 k2); cols: final pair (k3 k4); "
         "order (ee, eg, ge, gg)\n";
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2) {
      for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4)
          out << fmt(j.at4(i1, i2, i3, i4), sig)
              << (i3 == 1 && i4 == 1 ? "" : " ");
      out << '\n';
    }
  out << "mutual information: " << fmt(mutual_information(j).value_bits, sig)
      << " bit\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Collective radiative decay of two closely spaced two-level atoms "
      "viewed as an information channel: relaxation generator, finite-time "
      "and limit propagators, coincidence measurement statistics and the "
      "information they carry."};
  app.require_subcommand(1);

  Format format = Format::text;
  int precision = 9;
  Output output;
  app.add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text},
                                        {"csv", Format::csv},
                                        {"json", Format::json}}))
      ->default_str("text");
  app.add_option("--precision", precision, "significant digits for printing")
      ->check(CLI::Range(3, 17));
  app.add_option("--out", output.path, "write output to a file");

  int exit_code = 0;

  // exchange ------------------------------------------------------------
  double phi = 0.0;
  bool antiparallel = false;
  bool use_quadrature = false;
  auto* cmd_ex = app.add_subcommand(
      "exchange", "photon-exchange efficiency g for phase delay phi");
  cmd_ex->add_option("--phi", phi, "phase delay (transition frequency times "
                                   "separation over c)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_ex->add_flag("--antiparallel", antiparallel, "antiparallel dipoles");
  cmd_ex->add_flag("--quadrature", use_quadrature,
                   "evaluate by sphere quadrature instead of the closed form");
  cmd_ex->callback([&] {
    const Geometry geom(
        phi, antiparallel ? Orientation::antiparallel : Orientation::parallel);
    const double g = use_quadrature ? exchange_factor_integral(geom)
                                    : exchange_factor(geom);
    if (format == Format::json)
      output.emit("{\"phi\":" + fmt(phi, precision) +
                  ",\"g\":" + fmt(g, precision) + "}\n");
    else
      output.emit(fmt(g, precision) + "\n");
  });

  // liouvillian ---------------------------------------------------------
  double gval = 1.0, gc = 0.0;
  auto* cmd_li = app.add_subcommand(
      "liouvillian", "16x16 relaxation generator over the operator basis");
  cmd_li->add_option("--g", gval, "exchange efficiency, |g| <= 1")->required();
  cmd_li->add_option("--gc", gc, "coherent exchange strength (units of gamma)");
  cmd_li->callback([&] {
    Superoperator gen = collective_decay_generator(DecayRates(gval));
    if (gc != 0.0) gen = add_coherent_exchange(gen, gc);
    output.emit(format == Format::json
                    ? textio::matrix_json(gen.matrix16, precision) + "\n"
                    : textio::matrix_csv(gen.matrix16, precision));
  });

  // spectrum --------------------------------------------------------------
  auto* cmd_sp = app.add_subcommand("spectrum", "16 generator eigenvalues");
  cmd_sp->add_option("--g", gval, "exchange efficiency, |g| <= 1")->required();
  cmd_sp->add_option("--gc", gc, "coherent exchange strength");
  cmd_sp->callback([&] {
    Superoperator gen = collective_decay_generator(DecayRates(gval));
    if (gc != 0.0) gen = add_coherent_exchange(gen, gc);
    const auto evs = spectrum(gen);
    std::ostringstream out;
    if (format == Format::json) {
      out << "[";
      for (std::size_t k = 0; k < evs.size(); ++k) {
        if (k) out << ",";
        out << textio::fmt_complex(evs[k], precision);
      }
      out << "]\n";
    } else if (format == Format::csv) {
      out << "index,re,im\n";
      for (std::size_t k = 0; k < evs.size(); ++k)
        out << k << ',' << fmt(evs[k].real(), precision) << ','
            << fmt(evs[k].imag(), precision) << '\n';
    } else {
      for (const auto& ev : evs)
        out << fmt(ev.real(), precision) << ' ' << fmt(ev.imag(), precision)
            << '\n';
    }
    output.emit(out.str());
  });

  // steady ----------------------------------------------------------------
  double n1 = 0.0, n2 = 0.0;
  std::string c1_str, c2_str;
  auto* cmd_st = app.add_subcommand(
      "steady",
      "stationary state of the g=1 limit channel for a product input");
  cmd_st->add_option("--n1", n1, "atom 1 excited population")->required();
  cmd_st->add_option("--n2", n2, "atom 2 excited population")->required();
  cmd_st->add_option("--c1", c1_str, "atom 1 coherence as RE,IM");
  cmd_st->add_option("--c2", c2_str, "atom 2 coherence as RE,IM");
  cmd_st->callback([&] {
    const TlaState s1(n1, c1_str.empty() ? Complex(0) : parse_complex_pair(c1_str));
    const TlaState s2(n2, c2_str.empty() ? Complex(0) : parse_complex_pair(c2_str));
    const ChannelMap map =
        quasi_stationary_map(collective_decay_generator(DecayRates(1.0)));
    const DensityMatrix out_state =
        apply_to_state(map, product_state(s1, s2));
    const double a = singlet_probability(s1, s2);
    std::ostringstream out;
    if (format == Format::json) {
      out << "{\"A\":" << fmt(a, precision)
          << ",\"rho\":" << textio::matrix_json(out_state.matrix(), precision)
          << "}\n";
    } else if (format == Format::csv) {
      out << textio::matrix_csv(out_state.matrix(), precision);
    } else {
      out << "dark-state weight A = " << fmt(a, precision) << "\n";
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
          out << textio::fmt_complex(out_state.matrix()(i, j), precision)
              << (j == 3 ? "" : " ");
        out << "\n";
      }
    }
    output.emit(out.str());
  });

  // joint -------------------------------------------------------------------
  std::string mode_str = "two";
  auto* cmd_jt = app.add_subcommand(
      "joint", "outcome distribution of the coincidence measurement through "
               "the g=1 limit channel");
  cmd_jt->add_option("--mode", mode_str, "two | four")->required();
  cmd_jt->add_option("--n1", n1, "atom 1 excited population")->required();
  cmd_jt->add_option("--n2", n2, "atom 2 excited population")->required();
  cmd_jt->callback([&] {
    const InfoMode mode = parse_mode(mode_str);
    const ChannelMap map =
        quasi_stationary_map(collective_decay_generator(DecayRates(1.0)));
    const DensityMatrix rho = product_state(TlaState(n1), TlaState(n2));
    const JointDistribution j = mode == InfoMode::two_point
                                    ? joint_two_point(rho, map)
                                    : joint_four_point(rho, map);
    output.emit(joint_table(j, format, precision));
  });

  // info-surface --------------------------------------------------------------
  int grid_n = 201;
  std::string svg_path;
  auto* cmd_su = app.add_subcommand(
      "info-surface", "information over a population grid (CSV, optional SVG "
                      "heatmap)");
  cmd_su->add_option("--mode", mode_str, "two | four")->required();
  cmd_su->add_option("--grid", grid_n, "grid points per axis")
      ->check(CLI::Range(2, 2001));
  cmd_su->callback([&] {
    const InfoMode mode = parse_mode(mode_str);
    const auto pts = info_surface(mode, grid_n);
    output.emit(format == Format::json
                    ? [&] {
                        std::ostringstream os;
                        os << "[";
                        for (std::size_t k = 0; k < pts.size(); ++k) {
                          if (k) os << ",";
                          os << "[" << fmt(pts[k].n1, precision) << ","
                             << fmt(pts[k].n2, precision) << ","
                             << fmt(pts[k].info_bits, precision) << "]";
                        }
                        os << "]\n";
                        return os.str();
                      }()
                    : textio::surface_csv(pts, precision));
    if (!svg_path.empty()) {
      const std::string title =
          std::string(mode == InfoMode::two_point ? "two" : "four") +
          "-point information (bit)";
      textio::write_file(svg_path, textio::surface_svg(pts, grid_n, title));
    }
  });
  cmd_su->add_option("--svg", svg_path, "also write an SVG heatmap here");

  // optimize -------------------------------------------------------------------
  auto* cmd_op = app.add_subcommand(
      "optimize", "maximize the information over the initial populations");
  cmd_op->add_option("--mode", mode_str, "two | four")->required();
  cmd_op->callback([&] {
    const OptimumReport rep = optimize(parse_mode(mode_str));
    std::ostringstream out;
    if (format == Format::json) {
      out << "{\"value_bits\":" << fmt(rep.value_bits, precision)
          << ",\"n1\":" << fmt(rep.n1, precision)
          << ",\"n2\":" << fmt(rep.n2, precision) << ",\"argmax\":[";
      for (std::size_t k = 0; k < rep.argmax_points.size(); ++k) {
        if (k) out << ",";
        out << "[" << fmt(rep.argmax_points[k].n1, precision) << ","
            << fmt(rep.argmax_points[k].n2, precision) << "]";
      }
      out << "]}\n";
    } else if (format == Format::csv) {
      out << "n1,n2,info_bits\n";
      for (const auto& p : rep.argmax_points)
        out << fmt(p.n1, precision) << ',' << fmt(p.n2, precision) << ','
            << fmt(p.info_bits, precision) << '\n';
    } else {
      out << "maximum " << fmt(rep.value_bits, precision) << " bit at n1 = "
          << fmt(rep.n1, precision) << ", n2 = " << fmt(rep.n2, precision)
          << "\n";
      if (rep.argmax_points.size() > 1) {
        out << "equal-value points:\n";
        for (const auto& p : rep.argmax_points)
          out << "  (" << fmt(p.n1, precision) << ", " << fmt(p.n2, precision)
              << ")\n";
      }
    }
    output.emit(out.str());
  });

  // verify ----------------------------------------------------------------------
  std::string verify_json;
  auto* cmd_ve = app.add_subcommand(
      "verify", "run the full verification suite and print per-criterion "
                "results with a triage section");
  cmd_ve->add_option("--json", verify_json, "also write the report as JSON");
  cmd_ve->callback([&] {
    const verify::Report rep = verify::run_acceptance();
    std::ostringstream out;
    verify::print_report(rep, out);
    output.emit(out.str());
    if (!verify_json.empty())
      textio::write_file(verify_json, verify::report_json(rep) + "\n");
    if (!rep.ok()) exit_code = 2;
  });

  // let --format/--precision/--out appear after the subcommand too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
