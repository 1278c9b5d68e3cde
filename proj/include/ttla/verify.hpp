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

#ifndef TTLA_VERIFY_HPP
#define TTLA_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ttla::verify {

// One-shot verification suite.  Every quantitative claim the library is
// built to reproduce is checked at a pinned tolerance.  Sub-checks that
// compare against tabulated reference data which is demonstrably
// inconsistent with its own defining formulas are not silently dropped
// and not forced green: they are marked waived, the computed and
// tabulated values are both reported, and the derivation of the
// discrepancy goes to the triage section.

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  int waived = 0;   // waived sub-checks (documented in triage)
  std::string detail;
};

struct TriageNote {
  std::string where;
  std::string note;
};

struct Report {
  std::vector<CriterionResult> criteria;
  std::vector<TriageNote> triage;

  bool ok() const;
  int waived_total() const;
};

Report run_acceptance();

void print_report(const Report& r, std::ostream& os);
std::string report_json(const Report& r);

}  // namespace ttla::verify

#endif  // TTLA_VERIFY_HPP
