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

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI (path from TTLA_CLI) with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("TTLA_CLI");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool cli_available() { return std::getenv("TTLA_CLI") != nullptr; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exchange prints the closed-form value") {
  if (!cli_available()) return;
  const RunResult r = run_cli("exchange --phi 0.1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0.998001071\n");
  const RunResult anti = run_cli("exchange --phi 0.1 --antiparallel");
  CHECK(anti.out == "-0.998001071\n");
  const RunResult quad =
      run_cli("exchange --phi 0.5 --quadrature --precision 6");
  CHECK(quad.exit_code == 0);
  CHECK(quad.out == "0.950666\n");
}

TEST_CASE("joint table matches the reference corner case") {
  if (!cli_available()) return;
  const RunResult r = run_cli("joint --mode two --n1 0 --n2 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 0\n0.25 0.75\n") != std::string::npos);
  const RunResult csv = run_cli("joint --mode two --n1 0 --n2 0 --format csv");
  CHECK(csv.out.find("ground,excited,0.25\n") != std::string::npos);
  CHECK(csv.out.find("ground,ground,0.75\n") != std::string::npos);
}

TEST_CASE("steady reports the dark-state weight") {
  if (!cli_available()) return;
  const RunResult r = run_cli("steady --n1 1 --n2 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("dark-state weight A = 0.5\n") != std::string::npos);
}

TEST_CASE("byte-identical output on repeated runs") {
  if (!cli_available()) return;
  const std::string args =
      "info-surface --mode two --grid 15 --format csv";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n1,n2,info_bits\n", 0) == 0);

  const RunResult s1 = run_cli("spectrum --g 0.5 --format json");
  const RunResult s2 = run_cli("spectrum --g 0.5 --format json");
  CHECK(s1.out == s2.out);
}

TEST_CASE("exit codes: usage = 1, precondition = 1") {
  if (!cli_available()) return;
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("exchange").exit_code == 1);               // missing --phi
  CHECK(run_cli("exchange --phi -2").exit_code == 1);      // validator
  CHECK(run_cli("liouvillian --g 1.5").exit_code == 1);    // |g| > 1
  CHECK(run_cli("joint --mode five --n1 0 --n2 0").exit_code == 1);
}

TEST_CASE("verify subcommand runs the whole suite") {
  if (!cli_available()) return;
  const RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("criterion 12") != std::string::npos);
  CHECK(r.out.find("ALL CRITERIA PASSED") != std::string::npos);
  CHECK(r.out.find("triage") != std::string::npos);
}

TEST_CASE("svg heatmap is written next to the csv") {
  if (!cli_available()) return;
  const std::string csv_path = "/tmp/ttla_test_surface.csv";
  const std::string svg_path = "/tmp/ttla_test_surface.svg";
  std::remove(csv_path.c_str());
  std::remove(svg_path.c_str());
  const RunResult r = run_cli("info-surface --mode four --grid 9 --out " +
                              csv_path + " --svg " + svg_path);
  CHECK(r.exit_code == 0);
  FILE* f = std::fopen(svg_path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 8> head{};
  REQUIRE(std::fread(head.data(), 1, 4, f) == 4);
  std::fclose(f);
  CHECK(std::string(head.data(), 4) == "<svg");
  std::remove(csv_path.c_str());
  std::remove(svg_path.c_str());
}

}  // TEST_SUITE
