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

// Acceptance runner: one pass/fail line per criterion plus the triage
// section.  Exit 0 when every criterion passes, 2 otherwise.

#include <iostream>

#include "ttla/verify.hpp"

int main() {
  const ttla::verify::Report report = ttla::verify::run_acceptance();
  ttla::verify::print_report(report, std::cout);
  return report.ok() ? 0 : 2;
}
